#include "multisec/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace multisec {

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

void FeasibilityQuery::validate() const {
  auto check = [&](const std::vector<LinearConstraint>& rows, const char* what) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].coeffs.size() != variables)
        throw DimensionMismatch(std::string(what) + " row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].coeffs.size()) + " coefficients, expected " +
                                std::to_string(variables));
  };
  check(equalities, "equality");
  check(inequalities, "inequality");
}

namespace {

Rational dot(const RatVector& a, const RatVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

bool FeasibilityQuery::satisfied_by(const RatVector& x) const {
  if (x.size() != variables) return false;
  for (const auto& c : equalities)
    if (dot(c.coeffs, x) != c.rhs) return false;
  for (const auto& c : inequalities)
    if (dot(c.coeffs, x) < c.rhs) return false;
  return true;
}

namespace {

struct Row {
  RatVector a;
  Rational b;
  std::vector<bool> history;  // original inequalities combined into this row

  std::size_t weight() const {
    return static_cast<std::size_t>(std::count(history.begin(), history.end(), true));
  }
};

struct Substitution {
  std::size_t var;
  RatVector expr;  // x_var = constant + expr · x  (expr[var] == 0)
  Rational constant;
};

struct Stage {
  std::size_t var;
  std::vector<Row> rows;  // system in force just before `var` was eliminated
};

bool is_zero_row(const RatVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

// Scale by a positive factor so the first nonzero coefficient has magnitude 1.
void normalize(Row& r) {
  for (const auto& q : r.a) {
    if (q == 0) continue;
    const Rational scale = abs(q);
    for (auto& c : r.a) c /= scale;
    r.b /= scale;
    return;
  }
}

class Eliminator {
 public:
  Eliminator(const FeasibilityQuery& q, std::vector<bool> eliminable)
      : vars_(q.variables), eliminable_(std::move(eliminable)) {
    for (const auto& e : q.equalities) equalities_.push_back({e.coeffs, e.rhs, {}});
    const std::size_t m = q.inequalities.size();
    for (std::size_t i = 0; i < m; ++i) {
      Row r{q.inequalities[i].coeffs, q.inequalities[i].rhs, std::vector<bool>(m, false)};
      r.history[i] = true;
      inequalities_.push_back(std::move(r));
    }
  }

  // Returns false as soon as a contradiction 0 >= b > 0 or 0 = b != 0 appears.
  bool run() {
    if (!substitute_equalities()) return false;
    if (!clean(inequalities_)) return false;
    std::size_t fm_steps = 0;
    for (;;) {
      const auto next = choose_variable();
      if (!next) break;
      stages_.push_back({*next, inequalities_});
      eliminate(*next, ++fm_steps);
      if (!clean(inequalities_)) return false;
      done_[*next] = true;
    }
    return true;
  }

  const std::vector<Row>& equalities() const { return equalities_; }
  const std::vector<Row>& inequalities() const { return inequalities_; }

  // Fill in eliminated variables given values for the kept ones.
  void extend(RatVector& x) const {
    for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
      const std::size_t v = it->var;
      std::optional<Rational> lo, hi;
      for (const auto& r : it->rows) {
        const Rational& c = r.a[v];
        if (c == 0) continue;
        Rational rest = 0;
        for (std::size_t i = 0; i < vars_; ++i)
          if (i != v) rest += r.a[i] * x[i];
        const Rational bound = (r.b - rest) / c;
        if (c > 0) {
          if (!lo || bound > *lo) lo = bound;
        } else {
          if (!hi || bound < *hi) hi = bound;
        }
      }
      x[v] = pick_value(lo, hi);
    }
    for (auto it = substitutions_.rbegin(); it != substitutions_.rend(); ++it) {
      x[it->var] = it->constant + dot(it->expr, x);
    }
  }

 private:
  // Integer nearest zero inside [lo, hi] when one exists, otherwise an endpoint.
  static Rational pick_value(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) return 0;
    if (lo && *lo > 0) {
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      if (!hi || Rational(c) <= *hi) return Rational(c);
      return *lo;
    }
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
    if (!lo || Rational(f) >= *lo) return Rational(f);
    return *hi;
  }

  bool substitute_equalities() {
    std::vector<Row> remaining;
    std::vector<Row> pending = std::move(equalities_);
    for (std::size_t k = 0; k < pending.size(); ++k) {
      Row eq = pending[k];
      std::optional<std::size_t> pivot;
      for (std::size_t i = 0; i < vars_; ++i)
        if (eliminable_[i] && eq.a[i] != 0) {
          pivot = i;
          break;
        }
      if (!pivot) {
        if (is_zero_row(eq.a)) {
          if (eq.b != 0) return false;
        } else {
          remaining.push_back(std::move(eq));
        }
        continue;
      }
      const std::size_t p = *pivot;
      Substitution sub{p, RatVector(vars_), eq.b / eq.a[p]};
      for (std::size_t i = 0; i < vars_; ++i)
        if (i != p) sub.expr[i] = -eq.a[i] / eq.a[p];
      auto apply = [&](Row& r) {
        const Rational c = r.a[p];
        if (c == 0) return;
        r.a[p] = 0;
        for (std::size_t i = 0; i < vars_; ++i) r.a[i] += c * sub.expr[i];
        r.b -= c * sub.constant;
      };
      for (std::size_t j = k + 1; j < pending.size(); ++j) apply(pending[j]);
      for (auto& r : remaining) apply(r);
      for (auto& r : inequalities_) apply(r);
      substitutions_.push_back(std::move(sub));
      done_[p] = true;
    }
    equalities_ = std::move(remaining);
    for (auto& e : equalities_) normalize(e);
    return true;
  }

  std::optional<std::size_t> choose_variable() const {
    std::optional<std::size_t> best;
    long best_cost = 0;
    for (std::size_t v = 0; v < vars_; ++v) {
      if (!eliminable_[v] || done_[v]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : inequalities_) {
        if (r.a[v] > 0) ++pos;
        if (r.a[v] < 0) ++neg;
      }
      const long cost = pos * neg - pos - neg;
      if (!best || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    return best;
  }

  void eliminate(std::size_t v, std::size_t fm_steps) {
    std::vector<Row> pos, neg, out;
    for (auto& r : inequalities_) {
      if (r.a[v] > 0)
        pos.push_back(std::move(r));
      else if (r.a[v] < 0)
        neg.push_back(std::move(r));
      else
        out.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Row c;
        c.history.resize(p.history.size());
        for (std::size_t i = 0; i < c.history.size(); ++i) c.history[i] = p.history[i] || n.history[i];
        // Chernikov: after k eliminations a row built from more than k+1 originals is redundant.
        if (c.weight() > fm_steps + 1) continue;
        const Rational wp = -n.a[v];
        const Rational wn = p.a[v];
        c.a.resize(vars_);
        for (std::size_t i = 0; i < vars_; ++i) c.a[i] = wp * p.a[i] + wn * n.a[i];
        c.a[v] = 0;
        c.b = wp * p.b + wn * n.b;
        out.push_back(std::move(c));
      }
    inequalities_ = std::move(out);
  }

  // Normalize, drop trivial rows, merge parallel rows; false on a contradiction.
  static bool clean(std::vector<Row>& rows) {
    std::map<RatVector, std::size_t> index;
    std::vector<Row> out;
    for (auto& r : rows) {
      if (is_zero_row(r.a)) {
        if (r.b > 0) return false;
        continue;
      }
      normalize(r);
      auto [it, inserted] = index.try_emplace(r.a, out.size());
      if (inserted) {
        out.push_back(std::move(r));
      } else {
        Row& kept = out[it->second];
        if (r.b > kept.b || (r.b == kept.b && r.weight() < kept.weight())) kept = std::move(r);
      }
    }
    rows = std::move(out);
    return true;
  }

  std::size_t vars_;
  std::vector<bool> eliminable_;
  std::vector<bool> done_ = std::vector<bool>(vars_, false);
  std::vector<Row> equalities_;
  std::vector<Row> inequalities_;
  std::vector<Substitution> substitutions_;
  std::vector<Stage> stages_;
};

std::vector<LinearConstraint> truncate(const std::vector<Row>& rows, std::size_t kept) {
  std::vector<LinearConstraint> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back({RatVector(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(kept)), r.b});
  return out;
}

}  // namespace

std::optional<RatVector> feasible(const FeasibilityQuery& query) {
  query.validate();
  Eliminator elim(query, std::vector<bool>(query.variables, true));
  if (!elim.run()) return std::nullopt;
  for (const auto& e : elim.equalities())
    if (e.b != 0) return std::nullopt;
  for (const auto& r : elim.inequalities())
    if (r.b > 0) return std::nullopt;
  RatVector x(query.variables);
  elim.extend(x);
  if (!query.satisfied_by(x)) throw std::logic_error("feasibility witness failed to verify");
  return x;
}

Projection project(const FeasibilityQuery& query, std::size_t kept) {
  query.validate();
  if (kept > query.variables) throw DimensionMismatch("projection keeps more variables than exist");
  std::vector<bool> eliminable(query.variables, false);
  for (std::size_t i = kept; i < query.variables; ++i) eliminable[i] = true;
  Eliminator elim(query, std::move(eliminable));
  Projection out;
  if (!elim.run()) {
    out.infeasible = true;
    return out;
  }
  out.equalities = truncate(elim.equalities(), kept);
  out.inequalities = truncate(elim.inequalities(), kept);
  return out;
}

}  // namespace multisec

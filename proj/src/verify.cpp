#include "multisec/verify.hpp"

#include "multisec/card.hpp"
#include "multisec/hilbert.hpp"
#include "multisec/multisection.hpp"

#include <sstream>
#include <stdexcept>

namespace multisec {

namespace {

class Checker {
 public:
  Checker(std::ostream& out, VerifyOutcome& outcome) : out_(out), outcome_(outcome) {}

  template <class A, class B>
  void expect(const std::string& what, const A& expected, const B& computed) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    const bool ok = e.str() == c.str();
    ++(ok ? outcome_.passed : outcome_.failed);
    out_ << (ok ? "PASS " : "FAIL ") << what << ": expected " << e.str() << ", computed " << c.str() << '\n';
  }

 private:
  std::ostream& out_;
  VerifyOutcome& outcome_;
};

DivisorClass cls(std::initializer_list<long> v) { return make_int_vector(v); }

std::string u_text(const USet& u) {
  std::string s = "{";
  for (std::size_t k = 0; k < u.members.size(); ++k) s += (k ? "," : "") + std::to_string(u.members[k] + 1);
  return s + "}";
}

std::string shift_text(const CanonicalReport& c) { return c.shift ? to_string(*c.shift) : "none"; }

const char* yes_no(bool b) { return b ? "free" : "not free"; }

std::string window_text(const DegreeWindow& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + std::to_string(w.lo[i]) + ":" + std::to_string(w.hi[i]);
  return s;
}

void veronese(Checker& check) {
  for (long n = 1; n <= 6; ++n)
    for (long d = 1; d <= 6; ++d) {
      const MultiSectionSetup setup{build_projective(n), {cls({d})}};
      const std::string tag = "veronese P^" + std::to_string(n) + " D=" + std::to_string(d) + "H";
      check.expect(tag + " U", "{}", u_text(compute_U(setup)));
      check.expect(tag + " Cl(T)", d == 1 ? std::string("0") : "Z/" + std::to_string(d),
                   class_group(setup, Ring::T).describe());
      const auto rep = canonical_report(setup, Ring::T);
      const bool free = (n + 1) % d == 0;
      check.expect(tag + " omega_T", yes_no(free), yes_no(rep.free));
      if (!free || !rep.free) continue;
      check.expect(tag + " shift", to_string(make_int_vector({-(n + 1) / d})), shift_text(rep));
      const auto w = default_window(HilbertMarker::omega_T, USet{}, 1);
      check.expect(tag + " omega_T Hilbert check over " + window_text(w), "Hilbert-verified",
                   verify_free_shift(setup, rep, w).passed ? "Hilbert-verified" : "failed");
    }
}

template <class Fn>
void product_grid(Fn&& fn) {
  for (long m = 1; m <= 3; ++m)
    for (long n = 1; n <= 3; ++n)
      for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
          for (long c = 1; c <= 4; ++c)
            for (long d = 1; d <= 4; ++d)
              if (a * d != b * c) fn(m, n, a, b, c, d);
}

std::string product_tag(long m, long n, const std::vector<DivisorClass>& ds) {
  std::string s = "P^" + std::to_string(m) + "xP^" + std::to_string(n) + " D=";
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + to_string(ds[i]);
  return s;
}

void fano_product(Checker& check) {
  auto run = [&](long m, long n, const std::vector<DivisorClass>& ds, bool hilbert_check) {
    const MultiSectionSetup setup{build_product(m, n), ds};
    const std::string tag = "fano-product " + product_tag(m, n, ds);
    USet all;
    for (std::size_t i = 0; i < ds.size(); ++i) all.members.push_back(i);
    const USet u = compute_U(setup);
    check.expect(tag + " U", u_text(all), u_text(u));
    check.expect(tag + " Cl(T)", "Z^2", class_group(setup, Ring::T).describe());
    Integer sx = 0, sy = 0;
    for (const auto& d : ds) {
      sx += d[0];
      sy += d[1];
    }
    const auto rep = canonical_report(setup, Ring::T);
    check.expect(tag + " omega_T", yes_no(sx == m + 1 && sy == n + 1), yes_no(rep.free));
    if (rep.free && hilbert_check) {
      const auto w = default_window(HilbertMarker::omega_T, u, ds.size());
      check.expect(tag + " omega_T Hilbert check over " + window_text(w), "Hilbert-verified",
                   verify_free_shift(setup, rep, w).passed ? "Hilbert-verified" : "failed");
    }
  };
  product_grid([&](long m, long n, long a, long b, long c, long d) {
    run(m, n, {cls({a, b}), cls({c, d})}, a == 1 && b == 1 && m <= 2);
  });
  for (long m = 1; m <= 3; ++m)
    for (long n = 1; n <= 3; ++n)
      for (long x = 1; x <= 3; ++x)
        for (long y = 1; y <= 3; ++y) run(m, n, {cls({1, 1}), cls({1, 2}), cls({x, y})}, false);
}

void gorenstein_grid(Checker& check) {
  product_grid([&](long m, long n, long a, long b, long c, long d) {
    const std::vector<DivisorClass> ds{cls({a, b}), cls({c, d})};
    const MultiSectionSetup setup{build_product(m, n), ds};
    const auto rep = canonical_report(setup, Ring::T);
    const bool expected = m + 1 == a + c && n + 1 == b + d;
    const std::string tag = "gorenstein-grid " + product_tag(m, n, ds);
    check.expect(tag + " omega_T", yes_no(expected), yes_no(rep.free));
    if (expected) check.expect(tag + " shift", "(-1,-1)", shift_text(rep));
  });
}

void blowup(Checker& check) {
  const auto& card = builtin_cards().at(2).card;
  const MultiSectionSetup setup = to_setup(card);
  const std::string tag = "blowup " + card.name;
  check.expect(tag + " U", "{1}", u_text(compute_U(setup)));
  check.expect(tag + " Cl(T)", "Z", class_group(setup, Ring::T).describe());
  check.expect(tag + " Cl(R)", "0", class_group(setup, Ring::R).describe());
  const auto t = canonical_report(setup, Ring::T);
  const auto r = canonical_report(setup, Ring::R);
  check.expect(tag + " omega_T shift", "(-1,-3)", shift_text(t));
  check.expect(tag + " omega_R shift", "(-1,-3)", shift_text(r));
  const auto h = height_report(setup).heights;
  check.expect(tag + " ht(Q_1)", "exactly 1", h.at(0) == Height::exactly_one ? "exactly 1" : "at least 2");
  check.expect(tag + " ht(Q_2)", "at least 2", h.at(1) == Height::exactly_one ? "exactly 1" : "at least 2");

  const DegreeWindow wt{{1, -2}, {6, 8}}, wr{{-4, -4}, {6, 6}};
  for (const auto& [rep, w] : {std::pair{t, wt}, std::pair{r, wr}}) {
    if (!rep.shift) continue;
    const std::string ring = to_string(rep.ring);
    check.expect(tag + " omega_" + ring + " Hilbert check over " + window_text(w), "Hilbert-verified",
                 verify_free_shift(setup, rep, w).passed ? "Hilbert-verified" : "failed");
    for (std::size_t i = 0; i < 2; ++i)
      for (long delta : {-1L, 1L}) {
        IntVector v = *rep.shift;
        v[i] += delta;
        const auto verdict = verify_shift(setup, rep.ring, v, w);
        std::string computed = "passes";
        if (!verdict.passed) {
          computed = "fails at n = (";
          for (std::size_t k = 0; k < verdict.counterexample->size(); ++k)
            computed += (k ? ", " : "") + std::to_string((*verdict.counterexample)[k]);
          computed += ")";
        }
        check.expect(tag + " omega_" + ring + " perturbed shift " + to_string(v), verdict.passed ? "fails" : computed,
                     computed);
      }
  }
}

}  // namespace

const std::vector<std::string>& verify_names() {
  static const std::vector<std::string> names{"veronese", "fano-product", "gorenstein-grid", "blowup"};
  return names;
}

VerifyOutcome run_verify(const std::string& name, std::ostream& out) {
  VerifyOutcome outcome;
  Checker check(out, outcome);
  const bool all = name == "all";
  bool known = all;
  auto section = [&](const std::string& key, void (*fn)(Checker&)) {
    if (!all && name != key) return;
    known = true;
    fn(check);
  };
  section("veronese", veronese);
  section("fano-product", fano_product);
  section("gorenstein-grid", gorenstein_grid);
  section("blowup", blowup);
  if (!known) throw std::invalid_argument("unknown example '" + name + "'");
  out << (outcome.ok() ? "OK " : "FAILED ") << outcome.passed << " passed, " << outcome.failed << " failed\n";
  return outcome;
}

}  // namespace multisec

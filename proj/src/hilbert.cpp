#include "multisec/hilbert.hpp"

#include <sstream>

namespace multisec {

std::string to_string(HilbertMarker marker) {
  switch (marker) {
    case HilbertMarker::T:
      return "T";
    case HilbertMarker::R:
      return "R";
    case HilbertMarker::omega_T:
      return "omegaT";
    case HilbertMarker::omega_R:
      return "omegaR";
  }
  return "?";
}

std::optional<HilbertMarker> parse_marker(const std::string& text) {
  if (text == "T") return HilbertMarker::T;
  if (text == "R") return HilbertMarker::R;
  if (text == "omegaT") return HilbertMarker::omega_T;
  if (text == "omegaR") return HilbertMarker::omega_R;
  return std::nullopt;
}

bool DegreeWindow::empty() const {
  if (lo.size() != hi.size()) throw DimensionMismatch("degree window bounds differ in length");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return true;
  return false;
}

bool admissible(HilbertMarker marker, const USet& u, const DegreeVector& n) {
  switch (marker) {
    case HilbertMarker::T:
      for (long x : n)
        if (x < 0) return false;
      return true;
    case HilbertMarker::omega_T:
      for (auto i : u.members)
        if (n[i] < 1) return false;
      return true;
    case HilbertMarker::R:
    case HilbertMarker::omega_R:
      return true;
  }
  return false;
}

DegreeWindow default_window(HilbertMarker marker, const USet& u, std::size_t s) {
  DegreeWindow w{std::vector<long>(s), std::vector<long>(s, 8)};
  for (std::size_t i = 0; i < s; ++i) {
    switch (marker) {
      case HilbertMarker::T:
        w.lo[i] = 0;
        break;
      case HilbertMarker::omega_T:
        w.lo[i] = u.contains(i) ? 1 : -4;
        break;
      case HilbertMarker::R:
      case HilbertMarker::omega_R:
        w.lo[i] = -4;
        break;
    }
  }
  return w;
}

std::string HilbertTable::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < s; ++i) out << "n_" << (i + 1) << ',';
  out << "dim\n";
  for (const auto& [n, dim] : entries) {
    for (long x : n) out << x << ',';
    out << dim.get_str() << '\n';
  }
  return out.str();
}

namespace {

DivisorClass degree_class(const MultiSectionSetup& setup, const DegreeVector& n, bool twist_by_canonical) {
  DivisorClass c = twist_by_canonical ? setup.variety.canonical_class : DivisorClass(setup.variety.class_rank);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += setup.divisors[i][k] * n[i];
  return c;
}

bool is_canonical(HilbertMarker m) { return m == HilbertMarker::omega_T || m == HilbertMarker::omega_R; }
bool uses_T(HilbertMarker m) { return m == HilbertMarker::T || m == HilbertMarker::omega_T; }

void check_window(const MultiSectionSetup& setup, const DegreeWindow& window) {
  if (window.lo.size() != setup.s() || window.hi.size() != setup.s())
    throw DimensionMismatch("degree window has " + std::to_string(window.lo.size()) + " coordinates, expected " +
                            std::to_string(setup.s()));
}

}  // namespace

HilbertTable hilbert(const MultiSectionSetup& setup, HilbertMarker marker, const DegreeWindow& window) {
  check_window(setup, window);
  if (!setup.variety.oracle) throw NoOracle("variety '" + setup.variety.name + "' has no section oracle");
  const USet u = uses_T(marker) ? compute_U(setup) : USet{};
  HilbertTable table{marker, setup.s(), {}};
  window.for_each([&](const DegreeVector& n) {
    if (!admissible(marker, u, n)) return;
    table.entries.emplace(n, h0(setup.variety, degree_class(setup, n, is_canonical(marker))));
  });
  return table;
}

FreeShiftVerdict verify_shift(const MultiSectionSetup& setup, Ring ring, const IntVector& shift,
                              const DegreeWindow& window) {
  check_window(setup, window);
  if (shift.size() != setup.s()) throw DimensionMismatch("shift length does not match the number of divisors");
  if (!setup.variety.oracle) throw NoOracle("variety '" + setup.variety.name + "' has no section oracle");
  const HilbertMarker omega = ring == Ring::T ? HilbertMarker::omega_T : HilbertMarker::omega_R;
  const HilbertMarker base = ring == Ring::T ? HilbertMarker::T : HilbertMarker::R;
  const USet u = ring == Ring::T ? compute_U(setup) : USet{};

  FreeShiftVerdict verdict;
  window.for_each([&](const DegreeVector& n) {
    if (!verdict.passed || !admissible(omega, u, n)) return;
    ++verdict.degrees_checked;
    DegreeVector shifted(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) shifted[i] = n[i] + shift[i].get_si();
    const Integer lhs = h0(setup.variety, degree_class(setup, n, true));
    // The ring has no component outside its own support.
    const Integer rhs = admissible(base, u, shifted) ? h0(setup.variety, degree_class(setup, shifted, false)) : Integer(0);
    if (lhs != rhs) {
      verdict.passed = false;
      verdict.counterexample = n;
      verdict.omega_dim = lhs;
      verdict.ring_dim = rhs;
    }
  });
  return verdict;
}

FreeShiftVerdict verify_free_shift(const MultiSectionSetup& setup, const CanonicalReport& report,
                                   const DegreeWindow& window) {
  if (!report.free || !report.shift) throw ReportNotFree("canonical module is not free; there is no shift to verify");
  return verify_shift(setup, report.ring, *report.shift, window);
}

long bruteforce_product_dim(long m, long n, long p, long q) {
  if (m < 0 || n < 0 || p < 0 || q < 0) throw std::invalid_argument("bruteforce_product_dim: negative argument");
  // The walk below visits (total + 1)^vars exponent vectors per factor.
  auto walk_size = [](long vars, long total) {
    double size = 1;
    for (long i = 0; i < vars; ++i) size *= static_cast<double>(total + 1);
    return size;
  };
  if (walk_size(m + 1, p) > 1e7 || walk_size(n + 1, q) > 1e7)
    throw BoundExceeded("bruteforce_product_dim: enumeration bound exceeded");
  // Count exponent vectors of a given length and total by walking every one of them.
  auto count = [](long vars, long total) {
    std::vector<long> e(static_cast<std::size_t>(vars), 0);
    long found = 0;
    for (;;) {
      long sum = 0;
      for (long x : e) sum += x;
      if (sum == total) ++found;
      std::size_t k = 0;
      while (k < e.size() && e[k] == total) e[k++] = 0;
      if (k == e.size()) break;
      ++e[k];
    }
    return found;
  };
  return count(m + 1, p) * count(n + 1, q);
}

long bruteforce_vanishing_dim(long degree, long order) {
  if (degree < 0 || order < 0) throw std::invalid_argument("bruteforce_vanishing_dim: negative argument");
  if (degree > 30 || order > 30) throw BoundExceeded("bruteforce_vanishing_dim: bound exceeded");
  // Columns: x^i y^j with i + j <= degree (F(x, y, 1)). Rows: Taylor coefficients
  // of u^a v^b, a + b < order, in f(1 + u, 1 + v): binom(i, a) * binom(j, b).
  std::vector<std::pair<long, long>> cols, rows;
  for (long i = 0; i <= degree; ++i)
    for (long j = 0; i + j <= degree; ++j) cols.emplace_back(i, j);
  for (long a = 0; a < order; ++a)
    for (long b = 0; a + b < order; ++b) rows.emplace_back(a, b);
  auto choose = [](long nn, long k) -> Rational {
    if (k < 0 || k > nn) return 0;
    Rational r = 1;
    for (long t = 1; t <= k; ++t) r = r * (nn - k + t) / t;
    return r;
  };
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m[r][c] = choose(cols[c].first, rows[r].first) * choose(cols[c].second, rows[r].second);
  // Gaussian elimination over Q.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && m[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols.size(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<long>(cols.size() - rank);
}

}  // namespace multisec

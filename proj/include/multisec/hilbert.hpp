#pragma once

// Multigraded Hilbert functions of T, R and their canonical modules over a
// box of degrees, plus the numeric check that the canonical module is graded
// free with a given shift.

#include "multisec/multisection.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multisec {

using DegreeVector = std::vector<long>;

enum class HilbertMarker { T, R, omega_T, omega_R };

std::string to_string(HilbertMarker marker);
/// Accepts "T", "R", "omegaT", "omegaR".
std::optional<HilbertMarker> parse_marker(const std::string& text);

class ReportNotFree : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Inclusive per-coordinate bounds; an axis with lo > hi makes the box empty.
struct DegreeWindow {
  std::vector<long> lo;
  std::vector<long> hi;

  std::size_t size() const { return lo.size(); }
  bool empty() const;
  /// Calls fn on every degree of the box in lexicographic order.
  template <class Fn>
  void for_each(Fn&& fn) const;
};

/// T: n >= 0. omega_T: n_i >= 1 for i in U, other coordinates free.
/// R, omega_R: every degree.
bool admissible(HilbertMarker marker, const USet& u, const DegreeVector& n);

/// Box defaults: [0,8] for T; [1,8] on U and [-4,8] elsewhere for omega_T;
/// [-4,8] everywhere for R and omega_R.
DegreeWindow default_window(HilbertMarker marker, const USet& u, std::size_t s);

struct HilbertTable {
  HilbertMarker marker;
  std::size_t s = 0;
  std::map<DegreeVector, Integer> entries;  // lexicographic order

  /// Header "n_1,...,n_s,dim", LF line endings.
  std::string to_csv() const;
};

HilbertTable hilbert(const MultiSectionSetup& setup, HilbertMarker marker, const DegreeWindow& window);

struct FreeShiftVerdict {
  bool passed = true;
  std::size_t degrees_checked = 0;
  std::optional<DegreeVector> counterexample;  // first failing degree in scan order
  Integer omega_dim;                           // at the counterexample
  Integer ring_dim;                            // at counterexample + shift
};

/// Checks dim [omega]_n == dim [ring]_{n + shift} on every admissible n of the window.
FreeShiftVerdict verify_free_shift(const MultiSectionSetup& setup, const CanonicalReport& report,
                                   const DegreeWindow& window);

/// Same check with an explicit shift (used to probe perturbed shifts).
FreeShiftVerdict verify_shift(const MultiSectionSetup& setup, Ring ring, const IntVector& shift,
                              const DegreeWindow& window);

/// Number of monomials x^a y^b with x in m+1 variables, y in n+1 variables,
/// |a| = p, |b| = q, by explicit enumeration.
long bruteforce_product_dim(long m, long n, long p, long q);

/// Dimension of degree-`degree` ternary forms vanishing to order >= `order`
/// at [1:1:1], via the Taylor expansion at (1,1) in the chart z = 1.
long bruteforce_vanishing_dim(long degree, long order);

template <class Fn>
void DegreeWindow::for_each(Fn&& fn) const {
  if (empty()) return;
  DegreeVector n = lo;
  if (n.empty()) {
    fn(n);
    return;
  }
  for (;;) {
    fn(static_cast<const DegreeVector&>(n));
    std::size_t k = n.size();
    while (k > 0) {
      --k;
      if (n[k] < hi[k]) {
        ++n[k];
        break;
      }
      n[k] = lo[k];
      if (k == 0) return;
    }
  }
}

}  // namespace multisec

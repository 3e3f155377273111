#pragma once

// `multisec analyze`: everything the library can say about one card, as a
// deterministic text or JSON report.

#include "multisec/card.hpp"
#include "multisec/hilbert.hpp"
#include "multisec/multisection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multisec {

/// Outcome of the numeric free-shift check over a box of degrees.
struct HilbertSummary {
  Ring ring = Ring::T;
  DegreeWindow window;
  IntVector shift;
  std::size_t degrees_checked = 0;
  bool passed = false;
  std::optional<DegreeVector> counterexample;
  Integer omega_dim;
  Integer ring_dim;

  bool operator==(const HilbertSummary&) const = default;
};

struct AnalysisReport {
  std::string card_name;
  bool hypothesis_T = false;
  bool hypothesis_R = false;
  bool noetherian_assumed = true;
  std::string noetherian_note;  // empty for user cards

  std::optional<USet> u;
  std::optional<QuotientPresentation> class_group_T;
  std::optional<QuotientPresentation> class_group_R;
  std::optional<CanonicalReport> canonical_T;
  std::optional<CanonicalReport> canonical_R;
  std::optional<HeightReport> heights;
  std::vector<HilbertSummary> hilbert;  // one per free ring when the card has an oracle

  bool hypotheses_hold() const { return hypothesis_T && hypothesis_R; }
};

/// Runs every computation the hypotheses allow. Parts that need a failed
/// hypothesis are left empty rather than thrown.
AnalysisReport analyze(const AnalysisCard& card, bool verify_hilbert = true);

std::string report_to_json(const AnalysisReport& report);
/// Inverse of report_to_json; checks internal consistency. Throws ValidationError.
AnalysisReport report_from_json(const std::string& json_text);
std::string report_to_text(const AnalysisReport& report);

}  // namespace multisec

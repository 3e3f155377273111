#pragma once

// JSON analysis cards: a variety presentation plus the divisors D_1..D_s.
//
//   {"name": "...", "dim": 2, "class_rank": 2, "canonical_class": [1, -3],
//    "eff_generators": [[1, 0], [-1, 1]], "amp_generators": [[0, 1], [-1, 1]],
//    "oracle": {"kind": "blowup_p2_point"}, "divisors": [[-1, 0], [0, 1]]}
//
// Oracle kinds: {"kind": "projective", "n": N}, {"kind": "product", "m": M, "n": N},
// {"kind": "blowup_p2_point"}. Every number must be a JSON integer.

#include "multisec/geometry.hpp"
#include "multisec/multisection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multisec {

struct AnalysisCard {
  std::string name;
  long dim = 0;
  long class_rank = 0;
  DivisorClass canonical_class;
  std::vector<IntVector> eff_generators;
  std::vector<IntVector> amp_generators;
  std::optional<SectionOracle> oracle;
  std::vector<DivisorClass> divisors;

  bool operator==(const AnalysisCard&) const = default;
};

/// Parses and validates a card. Throws ValidationError naming the field.
AnalysisCard parse_card(const std::string& json_text);

/// Pretty-printed JSON with a trailing newline; parse_card inverts it.
std::string card_to_json(const AnalysisCard& card);

/// Builds the setup and runs every geometry check. Throws ValidationError.
MultiSectionSetup to_setup(const AnalysisCard& card);

struct BuiltinCard {
  std::string key;  // file stem used by `cards dump`
  AnalysisCard card;
};

/// veronese (P^2, D = 3H), fano-product (P^1 x P^2, (1,1), (1,2)),
/// blowup (plane blown up at a point, D_1 = -E, D_2 = A).
const std::vector<BuiltinCard>& builtin_cards();

/// A card has builtin provenance when it equals one of the compiled-in cards.
bool is_builtin(const AnalysisCard& card);

}  // namespace multisec

#include "multisec/card.hpp"

#include "json_util.hpp"

#include <set>

namespace multisec {

using json_util::Json;

namespace {

const std::set<std::string> kCardFields{"name",           "dim",     "class_rank", "canonical_class", "eff_generators",
                                        "amp_generators", "oracle", "divisors"};

const Json& require(const Json& obj, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(key, "missing field");
  return *it;
}

SectionOracle parse_oracle(const Json& j) {
  if (!j.is_object()) throw ValidationError("oracle", "expected an object with a \"kind\" field");
  const Json& kind = require(j, "kind");
  if (!kind.is_string()) throw ValidationError("oracle.kind", "expected a string");
  const auto& k = kind.get_ref<const std::string&>();
  auto param = [&](const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("oracle.") + key, "missing field");
    return json_util::to_long(*it, std::string("oracle.") + key);
  };
  auto only = [&](std::set<std::string> allowed) {
    allowed.insert("kind");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!allowed.count(it.key())) throw ValidationError("oracle." + it.key(), "unknown field for kind " + k);
  };
  if (k == "projective") {
    only({"n"});
    return SectionOracle::projective(param("n"));
  }
  if (k == "product") {
    only({"m", "n"});
    return SectionOracle::product(param("m"), param("n"));
  }
  if (k == "blowup_p2_point") {
    only({});
    return SectionOracle::blowup_p2_point();
  }
  throw ValidationError("oracle.kind", "unknown oracle kind '" + k + "'");
}

Json oracle_json(const SectionOracle& o) {
  Json j = Json::object();
  switch (o.kind) {
    case SectionOracle::Kind::projective:
      j["kind"] = "projective";
      j["n"] = o.n;
      break;
    case SectionOracle::Kind::product:
      j["kind"] = "product";
      j["m"] = o.m;
      j["n"] = o.n;
      break;
    case SectionOracle::Kind::blowup_p2_point:
      j["kind"] = "blowup_p2_point";
      break;
  }
  return j;
}

void check_lengths(const std::vector<IntVector>& vs, std::size_t r, const std::string& field) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i].size() != r)
      throw ValidationError(field + "[" + std::to_string(i) + "]", "expected " + std::to_string(r) +
                                                                     " coordinates, got " +
                                                                     std::to_string(vs[i].size()));
}

AnalysisCard card_from(const VarietyPresentation& x, std::string name, std::vector<DivisorClass> divisors) {
  return AnalysisCard{std::move(name),
                      x.dim,
                      static_cast<long>(x.class_rank),
                      x.canonical_class,
                      x.eff_cone.generators(),
                      x.amp_cone.generators(),
                      x.oracle,
                      std::move(divisors)};
}

}  // namespace

AnalysisCard parse_card(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("card", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("card", "expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!kCardFields.count(it.key())) throw ValidationError(it.key(), "unknown field");

  AnalysisCard card;
  const Json& name = require(j, "name");
  if (!name.is_string()) throw ValidationError("name", "expected a string");
  card.name = name.get<std::string>();
  card.dim = json_util::to_long(require(j, "dim"), "dim");
  card.class_rank = json_util::to_long(require(j, "class_rank"), "class_rank");
  card.canonical_class = json_util::to_vector(require(j, "canonical_class"), "canonical_class");
  card.eff_generators = json_util::to_vector_list(require(j, "eff_generators"), "eff_generators");
  card.amp_generators = json_util::to_vector_list(require(j, "amp_generators"), "amp_generators");
  if (const auto it = j.find("oracle"); it != j.end() && !it->is_null()) card.oracle = parse_oracle(*it);
  card.divisors = json_util::to_vector_list(require(j, "divisors"), "divisors");
  to_setup(card);  // full validation
  return card;
}

std::string card_to_json(const AnalysisCard& card) {
  Json j = Json::object();
  j["name"] = card.name;
  j["dim"] = card.dim;
  j["class_rank"] = card.class_rank;
  j["canonical_class"] = json_util::from_vector(card.canonical_class);
  Json eff = Json::array(), amp = Json::array(), div = Json::array();
  for (const auto& g : card.eff_generators) eff.push_back(json_util::from_vector(g));
  for (const auto& g : card.amp_generators) amp.push_back(json_util::from_vector(g));
  for (const auto& d : card.divisors) div.push_back(json_util::from_vector(d));
  j["eff_generators"] = eff;
  j["amp_generators"] = amp;
  if (card.oracle) j["oracle"] = oracle_json(*card.oracle);
  j["divisors"] = div;
  return json_util::format(j);
}

MultiSectionSetup to_setup(const AnalysisCard& card) {
  if (card.dim < 1) throw ValidationError("dim", "variety dimension must be positive, got " + std::to_string(card.dim));
  if (card.class_rank < 1) throw ValidationError("class_rank", "class lattice rank must be positive");
  const auto r = static_cast<std::size_t>(card.class_rank);
  if (card.canonical_class.size() != r)
    throw ValidationError("canonical_class", "expected " + std::to_string(r) + " coordinates, got " +
                                                 std::to_string(card.canonical_class.size()));
  check_lengths(card.eff_generators, r, "eff_generators");
  check_lengths(card.amp_generators, r, "amp_generators");
  check_lengths(card.divisors, r, "divisors");
  MultiSectionSetup setup{VarietyPresentation{card.name, card.dim, r, card.canonical_class,
                                              RationalCone(r, card.eff_generators),
                                              RationalCone(r, card.amp_generators), card.oracle},
                          card.divisors};
  setup.validate();
  return setup;
}

const std::vector<BuiltinCard>& builtin_cards() {
  static const std::vector<BuiltinCard> cards = [] {
    auto i = [](std::initializer_list<long> v) { return make_int_vector(v); };
    return std::vector<BuiltinCard>{
        {"veronese", card_from(build_projective(2), "P^2 with D = 3H", {i({3})})},
        {"fano-product", card_from(build_product(1, 2), "P^1 x P^2 with D = (1,1), (1,2)", {i({1, 1}), i({1, 2})})},
        {"blowup", card_from(build_blowup_p2_point(), "Bl_[1:1:1] P^2 with D = -E, A", {i({-1, 0}), i({0, 1})})},
    };
  }();
  return cards;
}

bool is_builtin(const AnalysisCard& card) {
  for (const auto& b : builtin_cards())
    if (b.card == card) return true;
  return false;
}

}  // namespace multisec

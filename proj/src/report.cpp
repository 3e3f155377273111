#include "multisec/report.hpp"

#include "json_util.hpp"

#include <sstream>

namespace multisec {

using json_util::Json;

namespace {

constexpr const char* kZariskiNote = "a famous result of Zariski";

HilbertSummary check_ring(const MultiSectionSetup& setup, const CanonicalReport& rep, const USet& u) {
  const HilbertMarker omega = rep.ring == Ring::T ? HilbertMarker::omega_T : HilbertMarker::omega_R;
  HilbertSummary h;
  h.ring = rep.ring;
  h.window = default_window(omega, u, setup.s());
  h.shift = *rep.shift;
  const auto v = verify_free_shift(setup, rep, h.window);
  h.degrees_checked = v.degrees_checked;
  h.passed = v.passed;
  h.counterexample = v.counterexample;
  h.omega_dim = v.omega_dim;
  h.ring_dim = v.ring_dim;
  return h;
}

// ---- JSON writers

Json group_json(const QuotientPresentation& q) {
  Json j = Json::object();
  j["description"] = q.describe();
  j["ambient_rank"] = q.ambient_rank;
  j["free_rank"] = q.free_rank;
  j["invariant_factors"] = json_util::from_vector(q.invariant_factors);
  j["projection"] = json_util::from_matrix_rows(q.projection);
  return j;
}

Json canonical_json(const CanonicalReport& c) {
  Json j = Json::object();
  j["representative"] = json_util::from_vector(c.omega_representative);
  Json cls = Json::object();
  cls["torsion"] = json_util::from_vector(c.omega_class.torsion);
  cls["free"] = json_util::from_vector(c.omega_class.free);
  j["class"] = cls;
  j["free"] = c.free;
  j["shift"] = c.shift ? json_util::from_vector(*c.shift) : Json(nullptr);
  Json basis = Json::array();
  for (std::size_t k = 0; k < c.shift_solution_lattice.cols(); ++k)
    basis.push_back(json_util::from_vector(c.shift_solution_lattice.column(k)));
  j["shift_solution_basis"] = basis;
  return j;
}

Json degree_json(const DegreeVector& n) {
  Json j = Json::array();
  for (long x : n) j.push_back(x);
  return j;
}

Json hilbert_json(const HilbertSummary& h) {
  Json j = Json::object();
  j["ring"] = to_string(h.ring);
  j["status"] = h.passed ? "Hilbert-verified" : "failed";
  Json box = Json::array();
  for (std::size_t i = 0; i < h.window.size(); ++i) box.push_back(Json::array({h.window.lo[i], h.window.hi[i]}));
  j["box"] = box;
  j["shift"] = json_util::from_vector(h.shift);
  j["degrees_checked"] = h.degrees_checked;
  if (h.counterexample) {
    Json c = Json::object();
    c["degree"] = degree_json(*h.counterexample);
    c["omega_dim"] = json_util::from_integer(h.omega_dim);
    c["ring_dim"] = json_util::from_integer(h.ring_dim);
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

// ---- JSON readers

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

bool read_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ValidationError(path, "expected a boolean");
  return j.get<bool>();
}

std::size_t read_size(const Json& j, const std::string& path) {
  const long x = json_util::to_long(j, path);
  if (x < 0) throw ValidationError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(x);
}

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

Ring read_ring(const Json& j, const std::string& path) {
  const auto s = read_string(j, path);
  if (s == "T") return Ring::T;
  if (s == "R") return Ring::R;
  throw ValidationError(path, "expected \"T\" or \"R\"");
}

QuotientPresentation read_group(const Json& j, const std::string& path) {
  QuotientPresentation q;
  q.ambient_rank = read_size(field(j, "ambient_rank", path), path + ".ambient_rank");
  q.free_rank = read_size(field(j, "free_rank", path), path + ".free_rank");
  q.invariant_factors = json_util::to_vector(field(j, "invariant_factors", path), path + ".invariant_factors", true);
  q.projection = json_util::to_matrix_rows(field(j, "projection", path), q.ambient_rank, path + ".projection", true);
  if (q.projection.rows() != q.invariant_factors.size() + q.free_rank)
    throw ValidationError(path + ".projection", "row count disagrees with the group");
  if (read_string(field(j, "description", path), path + ".description") != q.describe())
    throw ValidationError(path + ".description", "does not match the invariant factors");
  return q;
}

CanonicalReport read_canonical(const Json& j, Ring ring, std::size_t s, const std::string& path) {
  CanonicalReport c;
  c.ring = ring;
  c.omega_representative = json_util::to_vector(field(j, "representative", path), path + ".representative", true);
  const Json& cls = field(j, "class", path);
  c.omega_class.torsion = json_util::to_vector(field(cls, "torsion", path + ".class"), path + ".class.torsion", true);
  c.omega_class.free = json_util::to_vector(field(cls, "free", path + ".class"), path + ".class.free", true);
  c.free = read_bool(field(j, "free", path), path + ".free");
  if (c.free != c.omega_class.is_zero()) throw ValidationError(path + ".free", "disagrees with the class");
  const Json& shift = field(j, "shift", path);
  if (!shift.is_null()) c.shift = json_util::to_vector(shift, path + ".shift", true);
  if (c.free != c.shift.has_value()) throw ValidationError(path + ".shift", "present exactly when free");
  if (c.shift && c.shift->size() != s) throw ValidationError(path + ".shift", "wrong length");
  const auto basis = json_util::to_vector_list(field(j, "shift_solution_basis", path), path + ".shift_solution_basis", true);
  for (const auto& b : basis)
    if (b.size() != s) throw ValidationError(path + ".shift_solution_basis", "wrong vector length");
  c.shift_solution_lattice = IntMatrix::from_columns(s, basis);
  return c;
}

DegreeVector read_degree(const Json& j, const std::string& path) {
  DegreeVector n;
  for (const auto& x : json_util::to_vector(j, path)) {
    if (!x.fits_slong_p()) throw ValidationError(path, "degree out of range");
    n.push_back(x.get_si());
  }
  return n;
}

HilbertSummary read_hilbert(const Json& j, const std::string& path) {
  HilbertSummary h;
  h.ring = read_ring(field(j, "ring", path), path + ".ring");
  const auto status = read_string(field(j, "status", path), path + ".status");
  if (status != "Hilbert-verified" && status != "failed") throw ValidationError(path + ".status", "unknown status");
  h.passed = status == "Hilbert-verified";
  const Json& box = field(j, "box", path);
  if (!box.is_array()) throw ValidationError(path + ".box", "expected an array");
  for (std::size_t i = 0; i < box.size(); ++i) {
    const auto b = read_degree(box[i], path + ".box[" + std::to_string(i) + "]");
    if (b.size() != 2) throw ValidationError(path + ".box[" + std::to_string(i) + "]", "expected [lo, hi]");
    h.window.lo.push_back(b[0]);
    h.window.hi.push_back(b[1]);
  }
  h.shift = json_util::to_vector(field(j, "shift", path), path + ".shift", true);
  h.degrees_checked = read_size(field(j, "degrees_checked", path), path + ".degrees_checked");
  const Json& c = field(j, "counterexample", path);
  if (!c.is_null()) {
    h.counterexample = read_degree(field(c, "degree", path + ".counterexample"), path + ".counterexample.degree");
    h.omega_dim = json_util::to_integer(field(c, "omega_dim", path + ".counterexample"), path + ".counterexample", true);
    h.ring_dim = json_util::to_integer(field(c, "ring_dim", path + ".counterexample"), path + ".counterexample", true);
  }
  if (h.passed == h.counterexample.has_value())
    throw ValidationError(path + ".counterexample", "present exactly when the check failed");
  return h;
}

std::string height_text(Height h) { return h == Height::exactly_one ? "exactly 1" : "at least 2"; }

std::string one_based(const USet& u) {
  std::string out = "{";
  for (std::size_t k = 0; k < u.members.size(); ++k) out += (k ? ", " : "") + std::to_string(u.members[k] + 1);
  return out + "}";
}

std::string degree_text(const DegreeVector& n) {
  std::string out = "(";
  for (std::size_t k = 0; k < n.size(); ++k) out += (k ? ", " : "") + std::to_string(n[k]);
  return out + ")";
}

}  // namespace

AnalysisReport analyze(const AnalysisCard& card, bool verify_hilbert) {
  const MultiSectionSetup setup = to_setup(card);
  AnalysisReport r;
  r.card_name = card.name;
  if (is_builtin(card)) {
    r.noetherian_assumed = false;
    r.noetherian_note = kZariskiNote;
  }
  r.hypothesis_T = check_hypothesis_T(setup);
  r.hypothesis_R = check_hypothesis_R(setup);
  if (r.hypothesis_T) {
    r.u = compute_U(setup);
    r.class_group_T = class_group(setup, Ring::T);
    r.canonical_T = canonical_report(setup, Ring::T);
    r.heights = height_report(setup);
  }
  if (r.hypothesis_R) {
    r.class_group_R = class_group(setup, Ring::R);
    r.canonical_R = canonical_report(setup, Ring::R);
  }
  if (verify_hilbert && setup.variety.oracle) {
    if (r.canonical_T && r.canonical_T->free) r.hilbert.push_back(check_ring(setup, *r.canonical_T, *r.u));
    if (r.canonical_R && r.canonical_R->free) r.hilbert.push_back(check_ring(setup, *r.canonical_R, USet{}));
  }
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  Json j = Json::object();
  j["card"] = r.card_name;
  j["hypothesis_T"] = r.hypothesis_T;
  j["hypothesis_R"] = r.hypothesis_R;
  j["noetherian_assumed"] = r.noetherian_assumed;
  j["noetherian_note"] = r.noetherian_note.empty() ? Json(nullptr) : Json(r.noetherian_note);
  if (r.u) {
    Json u = Json::array();
    for (auto i : r.u->members) u.push_back(i + 1);
    j["U"] = u;
  } else {
    j["U"] = nullptr;
  }
  j["class_group_T"] = r.class_group_T ? group_json(*r.class_group_T) : Json(nullptr);
  j["class_group_R"] = r.class_group_R ? group_json(*r.class_group_R) : Json(nullptr);
  j["canonical_T"] = r.canonical_T ? canonical_json(*r.canonical_T) : Json(nullptr);
  j["canonical_R"] = r.canonical_R ? canonical_json(*r.canonical_R) : Json(nullptr);
  if (r.heights) {
    Json h = Json::array();
    for (auto x : r.heights->heights) h.push_back(height_text(x));
    j["heights"] = h;
  } else {
    j["heights"] = nullptr;
  }
  Json hv = Json::array();
  for (const auto& h : r.hilbert) hv.push_back(hilbert_json(h));
  j["hilbert_verification"] = hv;
  return json_util::format(j);
}

AnalysisReport report_from_json(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("report", std::string("malformed JSON: ") + e.what());
  }
  AnalysisReport r;
  r.card_name = read_string(field(j, "card", ""), "card");
  r.hypothesis_T = read_bool(field(j, "hypothesis_T", ""), "hypothesis_T");
  r.hypothesis_R = read_bool(field(j, "hypothesis_R", ""), "hypothesis_R");
  r.noetherian_assumed = read_bool(field(j, "noetherian_assumed", ""), "noetherian_assumed");
  if (const Json& note = field(j, "noetherian_note", ""); !note.is_null())
    r.noetherian_note = read_string(note, "noetherian_note");

  const Json& u = field(j, "U", "");
  const Json& heights = field(j, "heights", "");
  if (!u.is_null()) {
    USet set;
    for (const auto& x : json_util::to_vector(u, "U")) {
      if (x < 1 || !x.fits_slong_p()) throw ValidationError("U", "indices are 1-based");
      set.members.push_back(x.get_si() - 1);
    }
    r.u = set;
  }
  if (!heights.is_null()) {
    if (!heights.is_array()) throw ValidationError("heights", "expected an array");
    HeightReport h;
    for (const auto& x : heights) {
      const auto s = read_string(x, "heights");
      if (s == "exactly 1") h.heights.push_back(Height::exactly_one);
      else if (s == "at least 2") h.heights.push_back(Height::at_least_two);
      else throw ValidationError("heights", "unknown height '" + s + "'");
    }
    r.heights = h;
  }
  const std::size_t s = r.heights ? r.heights->heights.size() : 0;
  if (const Json& g = field(j, "class_group_T", ""); !g.is_null()) r.class_group_T = read_group(g, "class_group_T");
  if (const Json& g = field(j, "class_group_R", ""); !g.is_null()) r.class_group_R = read_group(g, "class_group_R");
  auto shift_len = [&](const Json& c) {
    const Json& sh = field(c, "shift", "");
    return sh.is_array() ? sh.size() : s;
  };
  if (const Json& c = field(j, "canonical_T", ""); !c.is_null())
    r.canonical_T = read_canonical(c, Ring::T, r.heights ? s : shift_len(c), "canonical_T");
  if (const Json& c = field(j, "canonical_R", ""); !c.is_null())
    r.canonical_R = read_canonical(c, Ring::R, shift_len(c), "canonical_R");
  const Json& hv = field(j, "hilbert_verification", "");
  if (!hv.is_array()) throw ValidationError("hilbert_verification", "expected an array");
  for (std::size_t i = 0; i < hv.size(); ++i)
    r.hilbert.push_back(read_hilbert(hv[i], "hilbert_verification[" + std::to_string(i) + "]"));

  if (r.hypothesis_T != (r.u && r.class_group_T && r.canonical_T && r.heights))
    throw ValidationError("hypothesis_T", "ring T data present exactly when the hypothesis holds");
  if (r.hypothesis_R != (r.class_group_R && r.canonical_R))
    throw ValidationError("hypothesis_R", "ring R data present exactly when the hypothesis holds");
  return r;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "holds" : "FAILS"; };
  out << "card: " << r.card_name << '\n';
  out << "hypothesis T (some lambda >= 1 with sum lambda_i D_i ample): " << yes(r.hypothesis_T) << '\n';
  out << "hypothesis R (some integer combination ample): " << yes(r.hypothesis_R) << '\n';
  out << "Noetherian assumed: " << (r.noetherian_assumed ? "true" : "false");
  if (!r.noetherian_note.empty()) out << " (" << r.noetherian_note << ")";
  out << '\n';
  if (r.u) out << "U = " << one_based(*r.u) << '\n';
  auto group = [&](const char* label, const std::optional<QuotientPresentation>& g) {
    if (g) out << label << g->describe() << '\n';
  };
  group("Cl(T) = ", r.class_group_T);
  group("Cl(R) = ", r.class_group_R);
  auto canonical = [&](const char* label, const std::optional<CanonicalReport>& c) {
    if (!c) return;
    out << label << ": representative " << to_string(c->omega_representative) << ", ";
    if (c->free)
      out << "free, omega = " << (c->ring == Ring::T ? "T" : "R") << to_string(*c->shift) << '\n';
    else
      out << "not free (class torsion " << to_string(c->omega_class.torsion) << ", free "
          << to_string(c->omega_class.free) << ")\n";
  };
  canonical("omega_T", r.canonical_T);
  canonical("omega_R", r.canonical_R);
  if (r.heights)
    for (std::size_t j = 0; j < r.heights->heights.size(); ++j)
      out << "ht(Q_" << (j + 1) << ") " << height_text(r.heights->heights[j]) << '\n';
  for (const auto& h : r.hilbert) {
    out << "omega_" << to_string(h.ring) << " over box ";
    for (std::size_t i = 0; i < h.window.size(); ++i) out << (i ? "," : "") << h.window.lo[i] << ':' << h.window.hi[i];
    out << ": ";
    if (h.passed)
      out << "Hilbert-verified (" << h.degrees_checked << " degrees)\n";
    else
      out << "FAILED at n = " << degree_text(*h.counterexample) << ": dim omega = " << h.omega_dim.get_str()
          << ", dim ring = " << h.ring_dim.get_str() << '\n';
  }
  return out.str();
}

}  // namespace multisec

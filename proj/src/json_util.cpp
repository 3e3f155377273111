#include "json_util.hpp"

#include <climits>
#include <sstream>

namespace multisec::json_util {

Json from_integer(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json from_vector(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(from_integer(x));
  return out;
}

Json from_matrix_rows(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(from_vector(m.row(i)));
  return out;
}

Integer to_integer(const Json& j, const std::string& field, bool allow_string) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_number()) throw ValidationError(field, "expected an integer, got " + j.dump());
  if (allow_string && j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool digits = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) digits = digits && s[i] >= '0' && s[i] <= '9';
    if (digits) return Integer(s);
  }
  throw ValidationError(field, "expected an integer, got " + j.dump());
}

long to_long(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ValidationError(field, "expected an integer, got " + j.dump());
  const Integer x = to_integer(j, field);
  if (!x.fits_slong_p()) throw ValidationError(field, "integer out of range");
  return x.get_si();
}

IntVector to_vector(const Json& j, const std::string& field, bool allow_string) {
  if (!j.is_array()) throw ValidationError(field, "expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_integer(j[i], field + "[" + std::to_string(i) + "]", allow_string));
  return v;
}

std::vector<IntVector> to_vector_list(const Json& j, const std::string& field, bool allow_string) {
  if (!j.is_array()) throw ValidationError(field, "expected an array of integer vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_vector(j[i], field + "[" + std::to_string(i) + "]", allow_string));
  return out;
}

IntMatrix to_matrix_rows(const Json& j, std::size_t cols, const std::string& field, bool allow_string) {
  const auto rows = to_vector_list(j, field, allow_string);
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ValidationError(field + "[" + std::to_string(i) + "]", "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
  }
  return m;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_object()) return false;
    else if (e.is_array())
      for (const auto& f : e)
        if (f.is_structured()) return false;
  return true;
}

void write(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (is_flat(j)) {
    out << j.dump();
  } else if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out << pad << Json(it.key()).dump() << ": ";
      write(out, it.value(), indent + 2);
      out << (k + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else {
    out << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << pad;
      write(out, j[k], indent + 2);
      out << (k + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  }
}

}  // namespace

std::string format(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << '\n';
  return out.str();
}

}  // namespace multisec::json_util

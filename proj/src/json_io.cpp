#include "ordcone/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ordcone {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::vector<QVector> vectors_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of vectors");
  std::vector<QVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_from_json(j[i], dim, where + "/" + std::to_string(i)));
  return out;
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j.at(key).is_string()) throw InputError(std::string("/") + key + ": expected a string");
  return j.at(key).get<std::string>();
}

std::size_t positive_size(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw InputError(where + ": expected a positive integer");
  return j.get<std::size_t>();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // the library message already carries "at line L, column C"
    throw InputError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError(where + ": expected a rational string such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

QVector vector_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (j.size() != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " entries, found " + std::to_string(j.size()));
  QVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational_from_json(j[i], where + "/" + std::to_string(i));
  return v;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const std::vector<QVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const QMatrix& m) { return to_json(m.rows()); }

ConeSpec cone_spec_from_json(const json& j) {
  if (!j.is_object()) throw InputError("/: expected a JSON object describing a cone");
  const std::size_t dim = positive_size(require(j, "dim", "/"), "/dim");
  const bool has_g = j.contains("generators"), has_h = j.contains("halfspaces");
  if (!has_g && !has_h) throw InputError("/: a cone needs \"generators\" or \"halfspaces\"");

  ConeSpec spec{PolyhedralCone::zero(dim), optional_string(j, "name"), optional_string(j, "source")};
  try {
    if (has_g && has_h) {
      spec.cone = PolyhedralCone::from_both(dim, vectors_from_json(j.at("generators"), dim, "/generators"),
                                            vectors_from_json(j.at("halfspaces"), dim, "/halfspaces"));
    } else if (has_g) {
      spec.cone = PolyhedralCone::from_generators(dim, vectors_from_json(j.at("generators"), dim, "/generators"));
    } else {
      spec.cone = PolyhedralCone::from_halfspaces(dim, vectors_from_json(j.at("halfspaces"), dim, "/halfspaces"));
    }
  } catch (const ConeError& e) {
    throw InputError(std::string("/: ") + e.what());
  }
  return spec;
}

ConeSpec parse_cone_spec(std::string_view text) { return cone_spec_from_json(parse_json(text)); }

json cone_to_json(const PolyhedralCone& c) {
  return json{{"dim", c.dim()}, {"generators", to_json(c.generators())}, {"halfspaces", to_json(c.halfspaces())}};
}

json to_json(const ConeSpec& spec) {
  json out = cone_to_json(spec.cone);
  if (spec.name) out["name"] = *spec.name;
  if (spec.source) out["source"] = *spec.source;
  return out;
}

std::string serialize(const ConeSpec& spec) { return to_json(spec).dump(2) + "\n"; }

FiniteRepresentation representation_from_json(const json& j) {
  if (!j.is_object()) throw InputError("/: expected a JSON object describing a representation");
  const std::size_t dim = positive_size(require(j, "domain_dim", "/"), "/domain_dim");
  auto rows = vectors_from_json(require(j, "rows", "/"), dim, "/rows");
  try {
    if (!j.contains("labels")) return FiniteRepresentation(QMatrix(dim, std::move(rows)));
    const json& l = j.at("labels");
    if (!l.is_array()) throw InputError("/labels: expected an array of strings");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) throw InputError("/labels/" + std::to_string(i) + ": expected a string");
      labels.push_back(l[i].get<std::string>());
    }
    return FiniteRepresentation(QMatrix(dim, std::move(rows)), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("/: ") + e.what());
  }
}

json to_json(const FiniteRepresentation& r) {
  return json{{"domain_dim", r.domain_dim()}, {"rows", to_json(r.matrix())}, {"labels", r.omega_labels()}};
}

QVector parse_vector_text(std::string_view text) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    try {
      entries.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw InputError("bad vector entry \"" + item + "\" in \"" + std::string(text) + "\"");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return QVector(std::move(entries));
}

std::vector<QVector> parse_vector_list_text(std::string_view text, std::size_t dim) {
  std::vector<QVector> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    QVector v = parse_vector_text(text.substr(start, semi == std::string_view::npos ? text.npos : semi - start));
    if (v.dim() != dim)
      throw InputError("vector " + to_string(v) + " has " + std::to_string(v.dim()) + " entries, expected " +
                       std::to_string(dim));
    out.push_back(std::move(v));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace ordcone

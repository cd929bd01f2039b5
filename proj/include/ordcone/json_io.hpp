#ifndef ORDCONE_JSON_IO_HPP
#define ORDCONE_JSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ordcone/cone.hpp"
#include "ordcone/representation.hpp"

namespace ordcone {

/// Malformed or inconsistent input. The message locates the problem, either
/// as a line/column in the text or as a JSON pointer into the document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cone file: {"dim": n, "generators": [...], "halfspaces": [...],
/// "name": ..., "source": ...}. Either vector list may be omitted but not
/// both; when both are given they must describe the same cone.
struct ConeSpec {
  PolyhedralCone cone;
  std::optional<std::string> name;
  std::optional<std::string> source;
};

nlohmann::json parse_json(std::string_view text);
std::string read_file(const std::string& path);

/// Accepts "p", "p/q" or a JSON integer. Floats are rejected.
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
QVector vector_from_json(const nlohmann::json& j, std::size_t dim, const std::string& where);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const QVector& v);
nlohmann::json to_json(const std::vector<QVector>& vs);
nlohmann::json to_json(const QMatrix& m);

ConeSpec cone_spec_from_json(const nlohmann::json& j);
ConeSpec parse_cone_spec(std::string_view text);
/// Canonical form: both representations in canonical order.
nlohmann::json to_json(const ConeSpec& spec);
nlohmann::json cone_to_json(const PolyhedralCone& c);
std::string serialize(const ConeSpec& spec);

/// {"domain_dim": n, "rows": [...], "labels": [...]}; labels optional.
FiniteRepresentation representation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FiniteRepresentation& r);

/// "1,-2,3/4" -> (1,-2,3/4). Throws InputError.
QVector parse_vector_text(std::string_view text);
/// "1,0;0,1" -> two vectors, all of length dim.
std::vector<QVector> parse_vector_list_text(std::string_view text, std::size_t dim);

}  // namespace ordcone

#endif  // ORDCONE_JSON_IO_HPP

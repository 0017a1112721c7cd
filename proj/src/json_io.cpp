#include "centra/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace centra {

using nlohmann::json;

FieldSpec parse_field_spec(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw std::invalid_argument("field must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    if (!j.contains("p") || !j.at("p").is_number_unsigned())
      throw std::invalid_argument("prime field needs a positive integer \"p\"");
    return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  }
  throw std::invalid_argument("unknown field kind: " + kind);
}

namespace {

FieldElem parse_scalar(const FieldSpec& spec, const json& j) {
  if (j.is_number_integer())
    return FieldElem::from_int(spec, j.get<long long>());
  if (j.is_string()) return FieldElem::parse(spec, j.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or strings");
}

}  // namespace

MatrixDocument parse_matrix_document(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
    throw std::invalid_argument("document needs \"field\" and \"rows\"");
  const FieldSpec spec = parse_field_spec(j.at("field"));
  const json& rows = j.at("rows");
  if (!rows.is_array() || rows.empty() || !rows.front().is_array() ||
      rows.front().empty())
    throw std::invalid_argument("\"rows\" must be a nonempty 2d array");
  const std::size_t r = rows.size();
  const std::size_t c = rows.front().size();
  std::vector<FieldElem> entries;
  entries.reserve(r * c);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != c)
      throw std::invalid_argument("\"rows\" must be rectangular");
    for (const json& cell : row) entries.push_back(parse_scalar(spec, cell));
  }
  return {spec, Matrix(spec, r, c, std::move(entries))};
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

MatrixDocument load_matrix_document(const std::string& path) {
  return parse_matrix_document(read_json_file(path));
}

MatrixDocument load_matrix_document(const std::string& path,
                                    const FieldSpec& field_override) {
  json j = read_json_file(path);
  j["field"] = field_to_json(field_override);
  return parse_matrix_document(j);
}

json field_to_json(const FieldSpec& spec) {
  if (spec.is_prime_field())
    return json{{"kind", "prime"}, {"p", spec.modulus()}};
  return json{{"kind", "rational"}};
}

json scalar_to_json(const FieldElem& e) {
  if (e.spec().is_prime_field()) return json(e.residue());
  const mpq_class& q = e.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return json(static_cast<long long>(q.get_num().get_si()));
  return json(q.get_str());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v[i]));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_json(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json poly_to_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
  return json{{"coeffs", std::move(coeffs)}, {"display", p.to_string()}};
}

std::string digest_files(const std::vector<std::string>& paths) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    for (const char c : buffer.str()) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

}  // namespace centra

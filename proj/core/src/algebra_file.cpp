#include "hopf/algebra_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& member(const json& doc, const char* key) {
  if (!doc.contains(key)) throw SemanticError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t index_at(const json& entry, std::size_t pos, std::size_t dim,
                     const std::string& where) {
  const json& v = entry.at(pos);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SemanticError(where + ": index must be a non-negative integer");
  const auto idx = v.get<std::size_t>();
  if (idx >= dim)
    throw SemanticError(where + ": index " + std::to_string(idx) + " out of range for dimension " +
                        std::to_string(dim));
  return idx;
}

Scalar scalar_at(const json& v, const FieldSpec& field, const std::string& where) {
  if (!v.is_string()) throw SemanticError(where + ": scalar must be a string");
  try {
    return Scalar::parse(field, v.get<std::string>());
  } catch (const ScalarParseError& err) {
    throw SemanticError(where + ": " + err.what());
  }
}

FieldSpec parse_field(const json& f) {
  const std::string kind = member(f, "kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "cyclotomic") {
    const json& order = member(f, "order");
    if (!order.is_number_integer() || order.get<long long>() < 1)
      throw SemanticError("field.order must be a positive integer");
    return FieldSpec::cyclotomic(order.get<unsigned>());
  }
  throw SemanticError("unknown field kind \"" + kind + "\"");
}

void read_triples(const json& list, const char* key, Tensor3& target, const FieldSpec& field,
                  std::size_t dim) {
  if (!list.is_array()) throw SemanticError(std::string(key) + " must be an array");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = std::string(key) + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != 4)
      throw SemanticError(where + ": expected [i, j, k, \"scalar\"]");
    const std::size_t i = index_at(entry, 0, dim, where);
    const std::size_t j = index_at(entry, 1, dim, where);
    const std::size_t k = index_at(entry, 2, dim, where);
    target(i, j, k) += scalar_at(entry[3], field, where);
  }
}

Vec read_dense(const json& list, const char* key, const FieldSpec& field, std::size_t dim) {
  if (!list.is_array() || list.size() != dim)
    throw SemanticError(std::string(key) + " must be an array of " + std::to_string(dim) +
                        " scalars");
  Vec v;
  for (std::size_t i = 0; i < dim; ++i)
    v.push_back(scalar_at(list[i], field, std::string(key) + "[" + std::to_string(i) + "]"));
  return v;
}

json dense(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json triples(const Tensor3& t) {
  json out = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) out.push_back({i, j, k, t(i, j, k).to_string()});
  return out;
}

}  // namespace

HopfAlgebra parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    const std::size_t offset = err.byte > 0 ? err.byte - 1 : 0;
    auto [line, column] = line_column(text, offset);
    throw SyntaxError("malformed algebra file: " + std::string(err.what()), line, column);
  }
  try {
    if (!doc.is_object()) throw SemanticError("algebra file must contain a JSON object");
    const std::string name = member(doc, "name").get<std::string>();
    const FieldSpec field = parse_field(member(doc, "field"));
    const json& dim_json = member(doc, "dim");
    if (!dim_json.is_number_integer() || dim_json.get<long long>() < 1)
      throw SemanticError("dim must be a positive integer");
    const auto dim = dim_json.get<std::size_t>();
    std::vector<std::string> basis = member(doc, "basis").get<std::vector<std::string>>();
    if (basis.size() != dim)
      throw SemanticError("basis lists " + std::to_string(basis.size()) + " names, dim is " +
                          std::to_string(dim));

    Bialgebra data{name, field, std::move(basis), Tensor3(field, dim), {}, Tensor3(field, dim), {}};
    read_triples(member(doc, "mul"), "mul", data.mul, field, dim);
    read_triples(member(doc, "comul"), "comul", data.comul, field, dim);
    data.counit = read_dense(member(doc, "counit"), "counit", field, dim);
    data.unit = read_dense(member(doc, "unit"), "unit", field, dim);

    if (!doc.contains("antipode")) return HopfAlgebra(data, compute_antipode(data));
    Matrix s(field, dim, dim);
    const json& list = doc.at("antipode");
    if (!list.is_array()) throw SemanticError("antipode must be an array");
    for (std::size_t e = 0; e < list.size(); ++e) {
      const std::string where = "antipode[" + std::to_string(e) + "]";
      const json& entry = list[e];
      if (!entry.is_array() || entry.size() != 3)
        throw SemanticError(where + ": expected [i, j, \"scalar\"]");
      const std::size_t i = index_at(entry, 0, dim, where);
      const std::size_t j = index_at(entry, 1, dim, where);
      s(j, i) += scalar_at(entry[2], field, where);
    }
    return HopfAlgebra(std::move(data), std::move(s));
  } catch (const json::exception& err) {
    throw SemanticError(std::string("algebra file has a field of the wrong type: ") + err.what());
  }
}

std::string format_algebra(const HopfAlgebra& h) {
  json doc = json::object();
  doc["name"] = h.name();
  if (h.field().kind() == FieldSpec::Kind::rational) {
    doc["field"] = {{"kind", "rational"}};
  } else {
    doc["field"] = {{"kind", "cyclotomic"}, {"order", h.field().order()}};
  }
  doc["dim"] = h.dim();
  doc["basis"] = h.basis();
  doc["mul"] = triples(h.mul());
  doc["comul"] = triples(h.comul());
  doc["counit"] = dense(h.counit());
  doc["unit"] = dense(h.unit());
  json s = json::array();
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (!h.antipode()(j, i).is_zero()) s.push_back({i, j, h.antipode()(j, i).to_string()});
  doc["antipode"] = std::move(s);
  // One sparse entry per line keeps diffs readable.
  std::ostringstream os;
  os << "{\n";
  const std::vector<std::string> order = {"name", "field",  "dim",  "basis",   "mul",
                                          "comul", "counit", "unit", "antipode"};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const json& v = doc.at(order[k]);
    os << "  " << json(order[k]).dump() << ": ";
    if ((order[k] == "mul" || order[k] == "comul" || order[k] == "antipode") && !v.empty()) {
      os << "[\n";
      for (std::size_t e = 0; e < v.size(); ++e)
        os << "    " << v[e].dump() << (e + 1 < v.size() ? ",\n" : "\n");
      os << "  ]";
    } else {
      os << v.dump();
    }
    os << (k + 1 < order.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

HopfAlgebra read_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void write_algebra(const HopfAlgebra& h, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_algebra(h);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace hopf

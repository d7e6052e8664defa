#include "prealg/io.hpp"

#include <fstream>
#include <sstream>

namespace prealg {

namespace {

const ordered_json& field_of(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field_of(j, key);
  if (!v.is_string()) throw Error(Errc::ParseError, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field_of(j, key);
  if (!v.is_number_integer()) throw Error(Errc::ParseError, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

CoeffDomain domain_from_json(const ordered_json& j) {
  std::string type = string_field(j, "type");
  try {
    if (type == "Q") return CoeffDomain::rationals();
    if (type == "Fp") return CoeffDomain::prime_field(int_field(j, "p"));
    if (type == "Zn") return CoeffDomain::residue_ring(int_field(j, "n"));
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidArgument) throw Error(Errc::ParseError, e.what());
    throw;
  }
  throw Error(Errc::ParseError, "unknown field type '" + type + "'");
}

ordered_json domain_to_json(const CoeffDomain& d) {
  ordered_json j;
  switch (d.kind()) {
    case DomainKind::Rationals: j["type"] = "Q"; break;
    case DomainKind::PrimeField:
      j["type"] = "Fp";
      j["p"] = d.modulus();
      break;
    case DomainKind::ResidueRing:
      j["type"] = "Zn";
      j["n"] = d.modulus();
      break;
  }
  return j;
}

Algebra algebra_from_json(const ordered_json& j) {
  std::string name = string_field(j, "name");
  CoeffDomain dom = domain_from_json(field_of(j, "field"));
  std::int64_t dim_raw = int_field(j, "dim");
  if (dim_raw < 1) throw Error(Errc::ParseError, "dim must be >= 1");
  std::size_t dim = static_cast<std::size_t>(dim_raw);
  const ordered_json& basis = field_of(j, "basis");
  if (!basis.is_array() || basis.size() != dim)
    throw Error(Errc::ParseError, "basis must be an array of dim labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) throw Error(Errc::ParseError, "basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  auto label_index = [&](const std::string& l) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw Error(Errc::ParseError, "unknown basis label '" + l + "'");
  };
  std::vector<Vec> sc(dim * dim, zero_vec(dom, dim));
  const ordered_json& products = field_of(j, "products");
  if (!products.is_array()) throw Error(Errc::ParseError, "products must be an array");
  for (const auto& entry : products) {
    std::size_t li = label_index(string_field(entry, "left"));
    std::size_t ri = label_index(string_field(entry, "right"));
    const ordered_json& value = field_of(entry, "value");
    if (!value.is_object()) throw Error(Errc::ParseError, "product value must be an object");
    Vec v = zero_vec(dom, dim);
    for (const auto& [label, scalar_text] : value.items()) {
      if (!scalar_text.is_string()) throw Error(Errc::ParseError, "scalar values must be strings");
      v[label_index(label)] = Scalar::parse(dom, scalar_text.get<std::string>());
    }
    sc[li * dim + ri] = std::move(v);
  }
  try {
    return Algebra(std::move(name), dom, dim, std::move(labels), std::move(sc));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Algebra parse_algebra(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON");
  return algebra_from_json(j);
}

Algebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

ordered_json algebra_to_json(const Algebra& a) {
  ordered_json j;
  j["name"] = a.name();
  j["field"] = domain_to_json(a.domain());
  j["dim"] = a.dim();
  j["basis"] = a.basis_labels();
  ordered_json products = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Vec& v = a.basis_product(i, k);
      if (is_zero_vec(v)) continue;
      ordered_json entry;
      entry["left"] = a.basis_labels()[i];
      entry["right"] = a.basis_labels()[k];
      ordered_json value;
      for (std::size_t m = 0; m < a.dim(); ++m)
        if (!v[m].is_zero()) value[a.basis_labels()[m]] = v[m].str();
      entry["value"] = std::move(value);
      products.push_back(std::move(entry));
    }
  j["products"] = std::move(products);
  return j;
}

std::string write_algebra(const Algebra& a) { return dump_canonical(algebra_to_json(a)); }

void save_algebra(const Algebra& a, const std::string& path) { write_file(path, write_algebra(a)); }

Matrix matrix_from_json(const ordered_json& rows, const CoeffDomain& d) {
  if (!rows.is_array() || rows.empty()) throw Error(Errc::ParseError, "matrix must be a nonempty array of rows");
  std::size_t r = rows.size();
  if (!rows[0].is_array()) throw Error(Errc::ParseError, "matrix rows must be arrays");
  std::size_t c = rows[0].size();
  Matrix m(d, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != c) throw Error(Errc::ParseError, "ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) {
      if (!row[k].is_string()) throw Error(Errc::ParseError, "matrix entries must be scalar strings");
      m.at(i, k) = Scalar::parse(d, row[k].get<std::string>());
    }
  }
  return m;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

MapFile parse_map_file(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON");
  MapFile f;
  f.source = string_field(j, "source");
  f.target = string_field(j, "target");
  f.matrix = field_of(j, "matrix");
  return f;
}

MapFile load_map_file(const std::string& path) { return parse_map_file(read_file(path)); }

Subspace subspace_from_json(const ordered_json& j, const CoeffDomain& d, std::size_t ambient) {
  const ordered_json& rows = field_of(j, "rows");
  if (!rows.is_array()) throw Error(Errc::ParseError, "rows must be an array");
  std::vector<Vec> gens;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != ambient)
      throw Error(Errc::ParseError, "subspace rows must have length " + std::to_string(ambient));
    Vec v;
    for (const auto& s : row) {
      if (!s.is_string()) throw Error(Errc::ParseError, "subspace entries must be scalar strings");
      v.push_back(Scalar::parse(d, s.get<std::string>()));
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(d, ambient, gens);
}

ordered_json subspace_to_json(const Subspace& s) {
  ordered_json rows = ordered_json::array();
  for (const Vec& b : s.basis()) {
    ordered_json row = ordered_json::array();
    for (const Scalar& x : b) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  ordered_json j;
  j["rows"] = std::move(rows);
  return j;
}

Subspace load_subspace(const std::string& path, const CoeffDomain& d, std::size_t ambient) {
  ordered_json j = ordered_json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON in " + path);
  return subspace_from_json(j, d, ambient);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write file: " + path);
  out << content;
}

std::string dump_canonical(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace prealg

#pragma once

#include <string>

#include <json.hpp>

#include "prealg/linear.hpp"
#include "prealg/algebra.hpp"

namespace prealg {

using ordered_json = nlohmann::ordered_json;

/// Algebra file format: {"name","field","dim","basis","products"} with
/// "field" one of {"type":"Q"}, {"type":"Fp","p":n}, {"type":"Zn","n":n};
/// "products" lists nonzero basis products as
/// {"left":label,"right":label,"value":{label:scalar-string,...}}.
Algebra algebra_from_json(const ordered_json& j);
Algebra parse_algebra(const std::string& text);
Algebra load_algebra(const std::string& path);

/// Canonical serialization: fixed key order, products sorted by basis
/// index with zero products omitted, canonical scalar strings.
ordered_json algebra_to_json(const Algebra& a);
std::string write_algebra(const Algebra& a);
void save_algebra(const Algebra& a, const std::string& path);

CoeffDomain domain_from_json(const ordered_json& j);
ordered_json domain_to_json(const CoeffDomain& d);

/// Map file format: {"source","target","matrix"} with rows outermost
/// (target.dim rows of source.dim scalar strings).
Matrix matrix_from_json(const ordered_json& rows, const CoeffDomain& d);
ordered_json matrix_to_json(const Matrix& m);

struct MapFile {
  std::string source;
  std::string target;
  ordered_json matrix;
};
MapFile parse_map_file(const std::string& text);
MapFile load_map_file(const std::string& path);

/// Subspace file format: {"rows":[[scalar-string,...],...]}; rows may be
/// any spanning set, canonicalized on load.
Subspace subspace_from_json(const ordered_json& j, const CoeffDomain& d, std::size_t ambient);
ordered_json subspace_to_json(const Subspace& s);
Subspace load_subspace(const std::string& path, const CoeffDomain& d, std::size_t ambient);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Canonical text rendering of a report document: 2-space indent plus
/// trailing newline; byte-stable across runs.
std::string dump_canonical(const ordered_json& j);

}  // namespace prealg

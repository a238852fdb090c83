#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "kls/incidence.hpp"
#include "kls/matroid.hpp"
#include "kls/polytope.hpp"

namespace kls {

using Json = nlohmann::ordered_json;

/// Coefficients low to high, e.g. t^2 - 3t + 2 <-> [2, -3, 1]. Coefficients
/// outside the signed 64-bit range are written as decimal strings.
Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// "x<y" key for a comparable pair.
std::string pair_key(const RankedPoset& poset, ElementIndex x, ElementIndex y);
std::pair<std::string, std::string> split_pair_key(const std::string& key);

/// {"x<y": [coeffs], ...} over strict pairs in pair order; the diagonal is
/// included only when requested.
Json element_to_json(const IncidenceElement& f, bool include_diagonal = false);
/// Reads "x<y" entries. Diagonal entries default to `diagonal` unless given as "x<x".
IncidenceElement element_from_json(const PosetPtr& poset, const Json& entries, const IntPolynomial& diagonal);

/// {"elements": [...], "covers": [[a, b], ...], "cover_ranks": {"a<b": r, ...}}
Json poset_to_json(const RankedPoset& poset);
PosetPtr poset_from_json(const Json& j);

/// {"type": "matrix", "field": "Q" | "F_p", "columns": [[...], ...]} |
/// {"type": "uniform", "n": .., "k": ..} | {"type": "graphic", "edges": [[u, v], ...]}
Matroid matroid_from_json(const Json& j);

/// {"facets": [[vertex indices], ...], "num_vertices": N}
PolytopeIncidence polytope_from_json(const Json& j);

}  // namespace kls

#include "kls/json_io.hpp"

#include <limits>

#include "kls/error.hpp"

namespace kls {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

long long as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_error(what + " must be an integer");
  return j.get<long long>();
}

std::string element_label(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  parse_error("element labels must be strings or integers");
}

}  // namespace

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  const Integer lo = std::numeric_limits<long long>::min();
  const Integer hi = std::numeric_limits<long long>::max();
  for (const auto& c : p.coeffs()) {
    if (c >= lo && c <= hi) out.push_back(c.convert_to<long long>());
    else out.push_back(c.str());
  }
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) parse_error("polynomial must be an array of coefficients");
  std::vector<Integer> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long long>());
    } else if (c.is_string()) {
      try {
        coeffs.emplace_back(c.get<std::string>());
      } catch (const std::exception&) {
        parse_error("bad integer coefficient \"" + c.get<std::string>() + "\"");
      }
    } else {
      parse_error("polynomial coefficients must be integers");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

std::string pair_key(const RankedPoset& poset, ElementIndex x, ElementIndex y) {
  return poset.label(x) + "<" + poset.label(y);
}

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  auto pos = key.find('<');
  if (pos == std::string::npos || key.find('<', pos + 1) != std::string::npos)
    parse_error("pair key \"" + key + "\" must look like \"x<y\"");
  return {key.substr(0, pos), key.substr(pos + 1)};
}

Json element_to_json(const IncidenceElement& f, bool include_diagonal) {
  Json out = Json::object();
  const RankedPoset& P = f.poset();
  for (PairIndex p = 0; p < P.num_pairs(); ++p) {
    auto [x, y] = P.pairs()[p];
    if (x == y && !include_diagonal) continue;
    out[pair_key(P, x, y)] = polynomial_to_json(f[p]);
  }
  return out;
}

IncidenceElement element_from_json(const PosetPtr& poset, const Json& entries, const IntPolynomial& diagonal) {
  if (!entries.is_object()) parse_error("incidence entries must be an object keyed \"x<y\"");
  IncidenceElement f(poset);
  for (ElementIndex x = 0; x < poset->size(); ++x) f.set(x, x, diagonal);
  for (const auto& [key, value] : entries.items()) {
    auto [a, b] = split_pair_key(key);
    ElementIndex x = poset->index_of(a);
    ElementIndex y = poset->index_of(b);
    if (!poset->leq(x, y)) throw Error(ErrorKind::NotComparable, "entry " + key + " is on an incomparable pair");
    f.set(x, y, polynomial_from_json(value));
  }
  return f;
}

Json poset_to_json(const RankedPoset& poset) {
  Json out;
  out["elements"] = poset.labels();
  Json covers = Json::array();
  Json ranks = Json::object();
  for (auto [x, y] : poset.covers()) {
    covers.push_back({poset.label(x), poset.label(y)});
    ranks[pair_key(poset, x, y)] = poset.rank(x, y);
  }
  out["covers"] = covers;
  out["cover_ranks"] = ranks;
  return out;
}

PosetPtr poset_from_json(const Json& j) {
  std::vector<std::string> elements;
  const auto& el = field(j, "elements");
  if (!el.is_array()) parse_error("\"elements\" must be an array");
  for (const auto& e : el) elements.push_back(element_label(e));

  std::vector<std::pair<std::string, std::string>> relations;
  const char* rel_name = j.contains("covers") ? "covers" : "relations";
  if (j.contains(rel_name)) {
    for (const auto& c : j.at(rel_name)) {
      if (!c.is_array() || c.size() != 2) parse_error("each cover must be a pair [a, b]");
      relations.emplace_back(element_label(c[0]), element_label(c[1]));
    }
  }
  RankPairs ranks;
  const char* rank_name = j.contains("cover_ranks") ? "cover_ranks" : "ranks";
  if (j.contains(rank_name)) {
    const auto& r = j.at(rank_name);
    if (!r.is_object()) parse_error("\"cover_ranks\" must be an object keyed \"a<b\"");
    for (const auto& [key, value] : r.items()) ranks[split_pair_key(key)] = static_cast<int>(as_int(value, key));
  }
  return build_poset(elements, relations, ranks);
}

Matroid matroid_from_json(const Json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "uniform") {
    return Matroid::uniform(static_cast<int>(as_int(field(j, "n"), "n")), static_cast<int>(as_int(field(j, "k"), "k")));
  }
  if (type == "graphic") {
    std::vector<std::pair<long long, long long>> edges;
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair [u, v]");
      edges.emplace_back(as_int(e[0], "vertex"), as_int(e[1], "vertex"));
    }
    return Matroid::graphic(edges);
  }
  if (type == "matrix") {
    Columns columns;
    for (const auto& c : field(j, "columns")) {
      if (!c.is_array()) parse_error("each column must be an array");
      std::vector<long long> col;
      for (const auto& e : c) col.push_back(as_int(e, "matrix entry"));
      columns.push_back(std::move(col));
    }
    std::string f = j.value("field", std::string("Q"));
    if (f == "Q") return Matroid::from_matrix(columns, Field::rationals());
    if (f.rfind("F_", 0) == 0) {
      long long p = 0;
      try {
        p = std::stoll(f.substr(2));
      } catch (const std::exception&) {
        parse_error("bad field \"" + f + "\"");
      }
      return Matroid::from_matrix(columns, Field::mod(p));
    }
    parse_error("field must be \"Q\" or \"F_p\"");
  }
  parse_error("unknown matroid type \"" + type + "\"");
}

PolytopeIncidence polytope_from_json(const Json& j) {
  PolytopeIncidence p;
  p.num_vertices = static_cast<int>(as_int(field(j, "num_vertices"), "num_vertices"));
  for (const auto& f : field(j, "facets")) {
    if (!f.is_array()) parse_error("each facet must be an array of vertex indices");
    std::vector<int> facet;
    for (const auto& v : f) facet.push_back(static_cast<int>(as_int(v, "vertex index")));
    p.facets.push_back(std::move(facet));
  }
  return p;
}

}  // namespace kls

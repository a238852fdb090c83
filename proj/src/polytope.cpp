#include "kls/polytope.hpp"

#include <algorithm>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "kls/engine.hpp"
#include "kls/error.hpp"

namespace kls {

namespace {

using VertexSet = boost::dynamic_bitset<>;

std::vector<int> to_list(const VertexSet& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::string face_label(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

}  // namespace

PolytopeIncidence simplex(int dim) {
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "simplex dimension must be >= 0");
  PolytopeIncidence p{dim + 1, {}};
  if (dim == 0) return p;
  for (int skip = 0; skip <= dim; ++skip) {
    std::vector<int> facet;
    for (int v = 0; v <= dim; ++v)
      if (v != skip) facet.push_back(v);
    p.facets.push_back(facet);
  }
  return p;
}

PolytopeIncidence cube(int dim) {
  if (dim < 0 || dim > 16) throw Error(ErrorKind::InvalidArgument, "cube dimension must be in [0, 16]");
  PolytopeIncidence p{1 << dim, {}};
  for (int axis = 0; axis < dim; ++axis) {
    for (int side = 0; side < 2; ++side) {
      std::vector<int> facet;
      for (int v = 0; v < p.num_vertices; ++v)
        if ((v >> axis & 1) == side) facet.push_back(v);
      p.facets.push_back(facet);
    }
  }
  return p;
}

PolytopeIncidence cross_polytope(int dim) { return dual(cube(dim)); }

PolytopeIncidence polygon(int sides) {
  if (sides < 3) throw Error(ErrorKind::InvalidArgument, "a polygon needs at least 3 sides");
  PolytopeIncidence p{sides, {}};
  for (int i = 0; i < sides; ++i) p.facets.push_back({i, (i + 1) % sides});
  for (auto& f : p.facets) std::sort(f.begin(), f.end());
  return p;
}

PolytopeIncidence dual(const PolytopeIncidence& polytope) {
  // A point is self-dual; for larger polytopes the facets containing a vertex
  // form the corresponding dual facet.
  if (polytope.facets.empty()) return polytope;
  PolytopeIncidence d{static_cast<int>(polytope.facets.size()), {}};
  d.facets.resize(static_cast<std::size_t>(polytope.num_vertices));
  for (std::size_t f = 0; f < polytope.facets.size(); ++f)
    for (int v : polytope.facets[f]) d.facets.at(static_cast<std::size_t>(v)).push_back(static_cast<int>(f));
  return d;
}

FacePoset face_poset(const PolytopeIncidence& polytope) {
  if (polytope.num_vertices < 1) throw Error(ErrorKind::InvalidArgument, "a polytope needs a vertex");
  const auto nv = static_cast<std::size_t>(polytope.num_vertices);
  std::vector<VertexSet> facets;
  for (const auto& f : polytope.facets) {
    VertexSet s(nv);
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= nv)
        throw Error(ErrorKind::InvalidArgument, "facet refers to vertex " + std::to_string(v));
      s.set(static_cast<std::size_t>(v));
    }
    facets.push_back(s);
  }

  VertexSet whole(nv);
  whole.set();
  std::set<VertexSet> found{whole, VertexSet(nv)};
  std::vector<VertexSet> queue{whole};
  while (!queue.empty()) {
    VertexSet cur = queue.back();
    queue.pop_back();
    for (const auto& f : facets) {
      VertexSet meet = cur & f;
      if (found.insert(meet).second) queue.push_back(meet);
    }
  }

  std::vector<std::vector<int>> faces;
  for (const auto& s : found) faces.push_back(to_list(s));
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<VertexSet> sets;
  for (const auto& f : faces) {
    VertexSet s(nv);
    for (int v : f) s.set(static_cast<std::size_t>(v));
    sets.push_back(s);
  }

  const std::size_t n = faces.size();
  auto below = [&](std::size_t a, std::size_t b) { return a != b && sets[a].is_proper_subset_of(sets[b]); };
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<int> grade(n, -1);
  grade[0] = 0;
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      if (!below(a, b)) continue;
      bool between = false;
      for (std::size_t c = a + 1; c < b && !between; ++c) between = below(a, c) && below(c, b);
      if (between) continue;
      covers.emplace_back(a, b);
      if (grade[b] == -1) {
        grade[b] = grade[a] + 1;
      } else if (grade[b] != grade[a] + 1) {
        throw Error(ErrorKind::NotGraded, "face " + face_label(faces[b]) + " has maximal chains of different lengths");
      }
    }
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "∅" : i + 1 == n ? "Δ" : face_label(faces[i]));
  FacePoset out;
  out.poset = build_graded_poset(labels, covers, grade);
  out.faces = std::move(faces);
  out.dimension = grade.back() - 1;
  if (!is_locally_eulerian(out.poset))
    throw Error(ErrorKind::NotEulerian, "face poset is not Eulerian; the incidence is not polytopal");
  return out;
}

IncidenceElement eulerian_kernel(const PosetPtr& poset) {
  if (!is_locally_eulerian(poset)) throw Error(ErrorKind::NotEulerian, "poset is not locally Eulerian");
  IncidenceElement lambda(poset);
  for (PairIndex p = 0; p < poset->num_pairs(); ++p) {
    auto [x, y] = poset->pairs()[p];
    lambda[p] = IntPolynomial::binomial_power(-1, poset->rank(x, y));
  }
  return lambda;
}

IntPolynomial g_polynomial(const FacePoset& faces, const ComputeOptions& opts) {
  auto g = left_kls(eulerian_kernel(faces.poset), opts);
  return g.at(0, faces.poset->size() - 1);
}

IntPolynomial g_polynomial_dual(const FacePoset& faces, const ComputeOptions& opts) {
  auto f = right_kls(eulerian_kernel(faces.poset), opts);
  return f.at(0, faces.poset->size() - 1);
}

}  // namespace kls

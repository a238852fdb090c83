#pragma once

#include <string>
#include <vector>

#include "kls/incidence.hpp"
#include "kls/options.hpp"

namespace kls {

/// Combinatorial polytope: each facet is the list of vertices it contains.
struct PolytopeIncidence {
  int num_vertices = 0;
  std::vector<std::vector<int>> facets;
};

PolytopeIncidence simplex(int dim);
PolytopeIncidence cube(int dim);
PolytopeIncidence cross_polytope(int dim);
PolytopeIncidence polygon(int sides);
/// Vertices of the dual are the facets of the input and vice versa.
PolytopeIncidence dual(const PolytopeIncidence& polytope);

/// Face lattice with the empty face "∅" and the whole polytope "Δ";
/// other faces are labelled by their vertex sets. Rank = dimension + 1.
struct FacePoset {
  PosetPtr poset;
  std::vector<std::vector<int>> faces;  // vertex set of each poset element
  int dimension = 0;
};

/// Faces are the intersections of facets. Throws NotGraded or NotEulerian when
/// the incidence data cannot describe a polytope.
FacePoset face_poset(const PolytopeIncidence& polytope);

/// lambda_{xy} = (t - 1)^{r_{xy}}; NotEulerian unless the poset is locally Eulerian.
IncidenceElement eulerian_kernel(const PosetPtr& poset);

/// g_{∅Δ} of the left KLS-function of lambda.
IntPolynomial g_polynomial(const FacePoset& faces, const ComputeOptions& opts = {});
/// f_{∅Δ} of the right KLS-function of lambda, the g-polynomial of the dual polytope.
IntPolynomial g_polynomial_dual(const FacePoset& faces, const ComputeOptions& opts = {});

}  // namespace kls

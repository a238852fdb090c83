#pragma once

#include <vector>

#include "kls/engine.hpp"
#include "kls/incidence.hpp"

namespace kls {

using Permutation = std::vector<int>;  // one-line notation, values 1..n

int coxeter_length(const Permutation& w);
/// Tableau criterion: v <= w iff #{a <= i : v(a) >= k} <= #{a <= i : w(a) >= k} for all i, k.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// S_n under Bruhat order, ranked by length, with its R-polynomial kernel.
struct BruhatData {
  int n = 0;
  PosetPtr poset;
  std::vector<Permutation> elements;  // by poset index
  IncidenceElement r_polynomials;
};

/// Builds S_n (1 <= n <= 6). Elements are labelled by one-line notation ("213").
/// R is computed by the left-descent recursion and checked to be an
/// alternating kernel.
BruhatData bruhat(int n, const ComputeOptions& opts = {});

/// S_n ordered by the transitive closure of covers v < vt with l(vt) = l(v) + 1.
PosetPtr bruhat_from_covers(int n);

/// R_{vw} = R_{(w0 w)(w0 v)} and g_{vw} = f_{(w0 w)(w0 v)} on every pair v <= w.
std::vector<Check> w0_duality_check(const BruhatData& data, const ComputeOptions& opts = {});

}  // namespace kls

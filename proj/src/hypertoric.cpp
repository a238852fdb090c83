#include "kls/hypertoric.hpp"

#include "kls/engine.hpp"
#include "kls/error.hpp"

namespace kls {

namespace {

void require_doubled(const RankedPoset& lattice, const RankedPoset& doubled) {
  if (lattice.labels() != doubled.labels() || lattice.pairs() != doubled.pairs())
    throw Error(ErrorKind::PosetMismatch, "doubled poset does not match the lattice");
  for (auto [x, y] : lattice.pairs())
    if (doubled.rank(x, y) != 2 * lattice.rank(x, y))
      throw Error(ErrorKind::PosetMismatch, "doubled poset ranks are not twice the lattice ranks");
}

}  // namespace

IncidenceElement hypertoric_kernel(const PosetPtr& lattice, const PosetPtr& doubled, const ComputeOptions& opts) {
  require_doubled(*lattice, *doubled);
  const RankedPoset& L = *lattice;
  auto chi = characteristic_kernel(lattice, opts);
  IncidenceElement kappa(doubled);
  for (PairIndex p = 0; p < L.num_pairs(); ++p) {
    auto [F, H] = L.pairs()[p];
    IntPolynomial sum;
    for (ElementIndex G : L.interval(F, H)) {
      Integer weight = chi.at(F, G).evaluate(-1);
      if (L.rank(F, G) % 2 == 1) weight = -weight;
      sum += chi.at(G, H) * weight;
    }
    kappa[p] = IntPolynomial::binomial_power(-1, L.rank(F, H)) * sum;
  }
  Check k = check_kernel(kappa, opts);
  if (!k.passed) throw Error(ErrorKind::NotAKernel, "hypertoric kernel: " + k.detail);
  return kappa;
}

IncidenceElement hypertoric_kernel(const FlatLattice& lattice, const ComputeOptions& opts) {
  return hypertoric_kernel(lattice.poset, lattice.doubled, opts);
}

IncidenceElement broken_circuit_h(const PosetPtr& lattice, const PosetPtr& doubled, const ComputeOptions& opts) {
  require_doubled(*lattice, *doubled);
  const RankedPoset& L = *lattice;
  auto chi = characteristic_kernel(lattice, opts);
  IncidenceElement h(doubled);
  for (PairIndex p = 0; p < L.num_pairs(); ++p) {
    auto [F, G] = L.pairs()[p];
    const int r = L.rank(F, G);
    const IntPolynomial& c = chi[p];
    if (c.degree() > r)
      throw Error(ErrorKind::NonPolynomialResult,
                  "chi at " + L.label(F) + "<" + L.label(G) + " has degree above the rank");
    // (-t)^r chi(1 - 1/t) = (-1)^r sum_i c_i t^{r-i} (t-1)^i
    IntPolynomial value;
    for (int i = 0; i <= c.degree(); ++i)
      value += (IntPolynomial::binomial_power(-1, i) * c.coeff(i)).shifted(r - i);
    if (r % 2 == 1) value = -value;
    h[p] = std::move(value);
  }
  if (!in_half_subring(h))
    throw Error(ErrorKind::NonPolynomialResult, "broken-circuit h is outside the half subring");
  return h;
}

IncidenceElement broken_circuit_h(const FlatLattice& lattice, const ComputeOptions& opts) {
  return broken_circuit_h(lattice.poset, lattice.doubled, opts);
}

}  // namespace kls

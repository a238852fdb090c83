#pragma once

#include "kls/incidence.hpp"
#include "kls/matroid.hpp"
#include "kls/options.hpp"

namespace kls {

/// kappa_{FH} = (t-1)^{r_{FH}} sum_{F<=G<=H} (-1)^{r_{FG}} chi_{FG}(-1) chi_{GH}(t),
/// with r and chi taken on `lattice` and the result hosted on `doubled`
/// (the same order with ranks doubled). Throws NotAKernel if the result is not
/// a kernel on `doubled`.
IncidenceElement hypertoric_kernel(const PosetPtr& lattice, const PosetPtr& doubled, const ComputeOptions& opts = {});
IncidenceElement hypertoric_kernel(const FlatLattice& lattice, const ComputeOptions& opts = {});

/// h_{FG}(t) = (-t)^{r_{FG}} chi_{FG}(1 - 1/t) on the rank-doubled lattice.
IncidenceElement broken_circuit_h(const PosetPtr& lattice, const PosetPtr& doubled, const ComputeOptions& opts = {});
IncidenceElement broken_circuit_h(const FlatLattice& lattice, const ComputeOptions& opts = {});

}  // namespace kls

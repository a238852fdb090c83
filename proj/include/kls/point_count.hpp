#pragma once

#include <cstdint>
#include <vector>

#include "kls/engine.hpp"
#include "kls/matroid.hpp"

namespace kls {

/// Number of points of V^F / V^G over F_p avoiding every hyperplane indexed by
/// G \ F, where column i is the linear form cutting out hyperplane H_i and
/// V^S is the common zero set of the forms in S. Brute force over F_p^d;
/// FieldTooLarge when p^d exceeds `max_points`.
std::uint64_t count_complement_points(const Columns& columns, long long p, ElementSet F, ElementSet G,
                                      std::uint64_t max_points = std::uint64_t{1} << 24);

/// The integer columns define the same matroid over F_p as over the rationals.
bool realization_valid_mod(const Columns& columns, long long p);

/// chi_{FG}(q) against point counts for every flat pair and every q whose
/// reduction preserves the matroid. One Check per q; skipped q values are
/// reported as passing with a "skipped" detail.
std::vector<Check> crapo_cross_check(const Columns& columns, Field field, const std::vector<long long>& qs,
                                     const ComputeOptions& opts = {});

}  // namespace kls

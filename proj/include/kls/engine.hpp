#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kls/incidence.hpp"
#include "kls/options.hpp"

namespace kls {

using ElementPair = std::pair<ElementIndex, ElementIndex>;

/// Outcome of one named verification, with the first offending pair if any.
struct Check {
  std::string property;
  bool passed = false;
  std::optional<ElementPair> counterexample;
  std::string detail;
};

/// kappa_{xx} = 1 for all x and kappa * bar(kappa) = delta.
/// Propagates DegreeExceedsRank when kappa is outside the rank subring.
Check check_kernel(const IncidenceElement& kappa, const ComputeOptions& opts = {});
bool is_kernel(const IncidenceElement& kappa, const ComputeOptions& opts = {});

/// The unique f in the half subring with bar(f) = kappa f.
IncidenceElement right_kls(const IncidenceElement& kappa, const ComputeOptions& opts = {});
/// The unique g in the half subring with bar(g) = g kappa.
IncidenceElement left_kls(const IncidenceElement& kappa, const ComputeOptions& opts = {});

/// bar(f) f^{-1}: the kernel whose right KLS-function is f.
IncidenceElement kernel_from_right(const IncidenceElement& f, const ComputeOptions& opts = {});
/// g^{-1} bar(g): the kernel whose left KLS-function is g.
IncidenceElement kernel_from_left(const IncidenceElement& g, const ComputeOptions& opts = {});

struct KlsPair {
  IncidenceElement f;
  IncidenceElement g;
};

/// Z = g kappa f. Always symmetric; strict mode also checks Z = bar(g) f = g bar(f).
IncidenceElement z_function(const IncidenceElement& kappa, const ComputeOptions& opts = {});

/// Reconstructs (f, g) from a Z-function by increasing interval rank.
/// Throws NotSymmetric, or Unsolvable when an even-rank interval leaves a
/// nonzero middle coefficient.
KlsPair recover_fg_from_z(const IncidenceElement& z, const ComputeOptions& opts = {});

/// bar(g) f is symmetric, i.e. f and g come from one kernel (f, g in the half subring).
bool is_compatible_pair(const IncidenceElement& f, const IncidenceElement& g, const ComputeOptions& opts = {});

/// (bar(h) f)_{xz} = (h bar(f))_{xz} for every z >= x.
bool row_identity_holds(const IncidenceElement& h, const IncidenceElement& f, ElementIndex x,
                        const ComputeOptions& opts = {});

struct AlternatingDuality {
  IncidenceElement f;
  IncidenceElement g;
  std::vector<Check> checks;
  bool passed() const;
};

/// For an alternating kernel: verifies hat(g) f = delta and hat(f) g = delta.
AlternatingDuality alternating_duality(const IncidenceElement& kappa, const ComputeOptions& opts = {});

/// B' = f bar(g).
IncidenceElement batyrev_borisov(const IncidenceElement& kappa, const ComputeOptions& opts = {});

}  // namespace kls

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kls/options.hpp"
#include "kls/polynomial.hpp"
#include "kls/poset.hpp"

namespace kls {

/// An element of the incidence algebra I(P): one polynomial per comparable
/// pair x <= y of a RankedPoset. Entries default to zero.
class IncidenceElement {
 public:
  explicit IncidenceElement(PosetPtr poset);

  const RankedPoset& poset() const noexcept { return *poset_; }
  const PosetPtr& poset_ptr() const noexcept { return poset_; }

  const IntPolynomial& at(ElementIndex x, ElementIndex y) const;
  const IntPolynomial& at(const std::string& x, const std::string& y) const;
  const IntPolynomial& operator[](PairIndex p) const { return entries_[p]; }
  IntPolynomial& operator[](PairIndex p) { return entries_[p]; }
  void set(ElementIndex x, ElementIndex y, IntPolynomial value);

  /// Membership in the subring where deg f_{xy} <= r_{xy}.
  bool in_rank_subring() const;

  friend bool operator==(const IncidenceElement& a, const IncidenceElement& b);

 private:
  PosetPtr poset_;
  std::vector<IntPolynomial> entries_;  // indexed by PairIndex
};

/// First comparable pair (in pair order) where two elements differ.
std::optional<std::pair<ElementIndex, ElementIndex>> first_difference(const IncidenceElement& a,
                                                                      const IncidenceElement& b);

/// Throws PosetMismatch unless both elements live on equal posets.
void require_same_poset(const IncidenceElement& a, const IncidenceElement& b);

IncidenceElement identity_delta(const PosetPtr& poset);
IncidenceElement zeta(const PosetPtr& poset);
IncidenceElement mobius(const PosetPtr& poset);

/// (fg)_{xz} = sum over x <= y <= z of f_{xy} g_{yz}.
IncidenceElement convolve(const IncidenceElement& f, const IncidenceElement& g,
                          const ComputeOptions& opts = {});

/// Two-sided inverse; requires f_{xx} = +-1 for every x (NotInvertible otherwise).
IncidenceElement invert(const IncidenceElement& f, const ComputeOptions& opts = {});

/// t^{r_{xy}} f_{xy}(1/t) entry-wise; DegreeExceedsRank when deg f_{xy} > r_{xy}.
IncidenceElement bar(const IncidenceElement& f);

/// (-1)^{r_{xy}} f_{xy} entry-wise.
IncidenceElement hat(const IncidenceElement& f);

/// Diagonal 1 and deg f_{xy} < r_{xy}/2 strictly off the diagonal.
bool in_half_subring(const IncidenceElement& f);
bool is_symmetric(const IncidenceElement& f);
bool is_alternating(const IncidenceElement& f);

/// f* on the opposite poset: f*_{yx} = f_{xy}. `target` must equal opposite(f.poset()).
IncidenceElement transport_to_opposite(const IncidenceElement& f, const PosetPtr& target);
IncidenceElement transport_to_opposite(const IncidenceElement& f);

/// Moves entries onto a poset with the same labels and order but different ranks.
IncidenceElement rehost(const IncidenceElement& f, const PosetPtr& target);

/// mu_{xy} = (-1)^{r_{xy}} for every x <= y.
bool is_locally_eulerian(const PosetPtr& poset);

}  // namespace kls

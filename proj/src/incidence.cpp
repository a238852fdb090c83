#include "kls/incidence.hpp"

#include "kls/error.hpp"
#include "parallel.hpp"

namespace kls {

namespace {

std::string pair_name(const RankedPoset& p, ElementIndex x, ElementIndex y) {
  return p.label(x) + "<" + p.label(y);
}

}  // namespace

IncidenceElement::IncidenceElement(PosetPtr poset) : poset_(std::move(poset)) {
  if (!poset_) throw Error(ErrorKind::InvalidArgument, "null poset");
  entries_.resize(poset_->num_pairs());
}

const IntPolynomial& IncidenceElement::at(ElementIndex x, ElementIndex y) const {
  return entries_[poset_->pair_index(x, y)];
}

const IntPolynomial& IncidenceElement::at(const std::string& x, const std::string& y) const {
  return at(poset_->index_of(x), poset_->index_of(y));
}

void IncidenceElement::set(ElementIndex x, ElementIndex y, IntPolynomial value) {
  entries_[poset_->pair_index(x, y)] = std::move(value);
}

bool IncidenceElement::in_rank_subring() const {
  const auto& pairs = poset_->pairs();
  for (PairIndex p = 0; p < pairs.size(); ++p)
    if (entries_[p].degree() > poset_->rank(pairs[p].first, pairs[p].second)) return false;
  return true;
}

bool operator==(const IncidenceElement& a, const IncidenceElement& b) {
  if (a.poset_ != b.poset_ && !(*a.poset_ == *b.poset_)) return false;
  return a.entries_ == b.entries_;
}

std::optional<std::pair<ElementIndex, ElementIndex>> first_difference(const IncidenceElement& a,
                                                                      const IncidenceElement& b) {
  require_same_poset(a, b);
  for (PairIndex p = 0; p < a.poset().num_pairs(); ++p)
    if (a[p] != b[p]) return a.poset().pairs()[p];
  return std::nullopt;
}

void require_same_poset(const IncidenceElement& a, const IncidenceElement& b) {
  if (a.poset_ptr() == b.poset_ptr() || a.poset() == b.poset()) return;
  throw Error(ErrorKind::PosetMismatch, "incidence elements live on different posets");
}

IncidenceElement identity_delta(const PosetPtr& poset) {
  IncidenceElement d(poset);
  for (ElementIndex x = 0; x < poset->size(); ++x) d.set(x, x, IntPolynomial{1});
  return d;
}

IncidenceElement zeta(const PosetPtr& poset) {
  IncidenceElement z(poset);
  for (PairIndex p = 0; p < poset->num_pairs(); ++p) z[p] = IntPolynomial{1};
  return z;
}

IncidenceElement mobius(const PosetPtr& poset) { return invert(zeta(poset)); }

IncidenceElement convolve(const IncidenceElement& f, const IncidenceElement& g, const ComputeOptions& opts) {
  require_same_poset(f, g);
  const RankedPoset& P = f.poset();
  IncidenceElement out(f.poset_ptr());
  detail::parallel_for(P.num_pairs(), opts.threads, [&](PairIndex p) {
    auto [x, z] = P.pairs()[p];
    IntPolynomial acc;
    for (ElementIndex y : P.up_set(x)) {
      if (y > z) break;
      auto yz = P.find_pair(y, z);
      if (!yz) continue;
      acc.add_product(f[P.pair_index(x, y)], g[*yz]);
    }
    out[p] = std::move(acc);
  });
  return out;
}

IncidenceElement invert(const IncidenceElement& f, const ComputeOptions& opts) {
  const RankedPoset& P = f.poset();
  for (ElementIndex x = 0; x < P.size(); ++x) {
    const auto& d = f.at(x, x);
    if (!d.is_constant(1) && !d.is_constant(-1))
      throw Error(ErrorKind::NotInvertible,
                  "diagonal entry at " + P.label(x) + " is " + d.to_string() + ", not +-1");
  }
  IncidenceElement g(f.poset_ptr());
  // Row x only needs rows y > x, so rows are filled from the top down and the
  // entries of a row are independent of each other.
  for (ElementIndex x = P.size(); x-- > 0;) {
    const auto& row = P.up_set(x);
    const Integer unit = f.at(x, x).coeff(0);
    g.set(x, x, IntPolynomial::constant(unit));
    detail::parallel_for(row.size() - 1, opts.threads, [&](std::size_t k) {
      ElementIndex z = row[k + 1];
      IntPolynomial acc;
      for (ElementIndex y : row) {
        if (y == x) continue;
        if (y > z) break;
        auto yz = P.find_pair(y, z);
        if (!yz) continue;
        acc.add_product(f[P.pair_index(x, y)], g[*yz]);
      }
      acc *= -unit;
      g[P.pair_index(x, z)] = std::move(acc);
    });
  }
  return g;
}

IncidenceElement bar(const IncidenceElement& f) {
  const RankedPoset& P = f.poset();
  IncidenceElement out(f.poset_ptr());
  for (PairIndex p = 0; p < P.num_pairs(); ++p) {
    auto [x, y] = P.pairs()[p];
    int r = P.rank(x, y);
    if (f[p].degree() > r)
      throw Error(ErrorKind::DegreeExceedsRank, "entry " + pair_name(P, x, y) + " = " + f[p].to_string() +
                                                    " has degree above rank " + std::to_string(r));
    out[p] = f[p].reflect(r);
  }
  return out;
}

IncidenceElement hat(const IncidenceElement& f) {
  const RankedPoset& P = f.poset();
  IncidenceElement out(f.poset_ptr());
  for (PairIndex p = 0; p < P.num_pairs(); ++p) {
    auto [x, y] = P.pairs()[p];
    out[p] = P.rank(x, y) % 2 == 0 ? f[p] : -f[p];
  }
  return out;
}

bool in_half_subring(const IncidenceElement& f) {
  const RankedPoset& P = f.poset();
  for (PairIndex p = 0; p < P.num_pairs(); ++p) {
    auto [x, y] = P.pairs()[p];
    if (x == y) {
      if (!f[p].is_constant(1)) return false;
    } else if (2 * f[p].degree() >= P.rank(x, y)) {
      return false;
    }
  }
  return true;
}

bool is_symmetric(const IncidenceElement& f) { return f.in_rank_subring() && bar(f) == f; }

bool is_alternating(const IncidenceElement& f) { return f.in_rank_subring() && bar(f) == hat(f); }

IncidenceElement transport_to_opposite(const IncidenceElement& f, const PosetPtr& target) {
  const RankedPoset& P = f.poset();
  const std::size_t n = P.size();
  if (target->size() != n) throw Error(ErrorKind::PosetMismatch, "target is not the opposite poset");
  IncidenceElement out(target);
  for (PairIndex p = 0; p < P.num_pairs(); ++p) {
    auto [x, y] = P.pairs()[p];
    ElementIndex ox = n - 1 - x;
    ElementIndex oy = n - 1 - y;
    if (target->label(ox) != P.label(x) || !target->leq(oy, ox) || target->rank(oy, ox) != P.rank(x, y))
      throw Error(ErrorKind::PosetMismatch, "target is not the opposite poset");
    out.set(oy, ox, f[p]);
  }
  return out;
}

IncidenceElement transport_to_opposite(const IncidenceElement& f) {
  return transport_to_opposite(f, opposite(f.poset()));
}

IncidenceElement rehost(const IncidenceElement& f, const PosetPtr& target) {
  const RankedPoset& P = f.poset();
  if (target->labels() != P.labels() || target->num_pairs() != P.num_pairs() || target->pairs() != P.pairs())
    throw Error(ErrorKind::PosetMismatch, "target poset has a different order");
  IncidenceElement out(target);
  for (PairIndex p = 0; p < P.num_pairs(); ++p) out[p] = f[p];
  return out;
}

bool is_locally_eulerian(const PosetPtr& poset) {
  auto mu = mobius(poset);
  for (PairIndex p = 0; p < poset->num_pairs(); ++p) {
    auto [x, y] = poset->pairs()[p];
    if (!mu[p].is_constant(poset->rank(x, y) % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

}  // namespace kls

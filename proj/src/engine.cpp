#include "kls/engine.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "kls/error.hpp"
#include "parallel.hpp"

namespace kls {

namespace {

std::string pair_name(const RankedPoset& p, ElementIndex x, ElementIndex y) {
  return p.label(x) + "<" + p.label(y);
}

int half_bound(int rank) { return (rank + 1) / 2; }

// Strict pairs x < w grouped by r_{xw}, each group sorted by (x, w) unless a
// shuffle seed is supplied. Groups only depend on strictly lower ranks.
std::vector<std::vector<ElementPair>> rank_levels(const RankedPoset& P, const ComputeOptions& opts) {
  std::map<int, std::vector<ElementPair>> by_rank;
  for (auto [x, w] : P.pairs())
    if (x != w) by_rank[P.rank(x, w)].emplace_back(x, w);
  std::vector<std::vector<ElementPair>> levels;
  std::mt19937_64 rng(opts.tie_shuffle_seed.value_or(0));
  for (auto& [r, group] : by_rank) {
    if (opts.tie_shuffle_seed) std::shuffle(group.begin(), group.end(), rng);
    levels.push_back(std::move(group));
  }
  return levels;
}

void require_unit_diagonal(const IncidenceElement& kappa) {
  const RankedPoset& P = kappa.poset();
  for (ElementIndex x = 0; x < P.size(); ++x)
    if (!kappa.at(x, x).is_constant(1))
      throw Error(ErrorKind::NotAKernel, "diagonal entry at " + P.label(x) + " is not 1");
}

void require_kernel(const IncidenceElement& kappa, const ComputeOptions& opts) {
  require_unit_diagonal(kappa);
  if (!opts.strict) return;
  Check c = check_kernel(kappa, opts);
  if (!c.passed) throw Error(ErrorKind::NotAKernel, c.detail);
}

// Solves bar(h) - h = q for h with deg h < r/2, after confirming q is
// antisymmetric in the window [0, r].
IntPolynomial solve_half(const IntPolynomial& q, int r, const RankedPoset& P, ElementIndex x, ElementIndex w) {
  if (q.degree() > r || q.reflect(r) != -q)
    throw Error(ErrorKind::AntisymmetryFailure,
                "Q at " + pair_name(P, x, w) + " = " + q.to_string() + " is not antisymmetric for rank " +
                    std::to_string(r));
  return -q.truncate_below(half_bound(r));
}

template <class Step>
IncidenceElement run_recursion(const IncidenceElement& kappa, const ComputeOptions& opts, Step step) {
  const RankedPoset& P = kappa.poset();
  IncidenceElement out = identity_delta(kappa.poset_ptr());
  for (const auto& level : rank_levels(P, opts)) {
    detail::parallel_for(level.size(), opts.threads, [&](std::size_t k) {
      auto [x, w] = level[k];
      out[P.pair_index(x, w)] = step(out, x, w);
    });
  }
  return out;
}

}  // namespace

Check check_kernel(const IncidenceElement& kappa, const ComputeOptions& opts) {
  const RankedPoset& P = kappa.poset();
  Check c{"is_kernel", true, std::nullopt, ""};
  for (ElementIndex x = 0; x < P.size(); ++x) {
    if (!kappa.at(x, x).is_constant(1)) {
      c.passed = false;
      c.counterexample = ElementPair{x, x};
      c.detail = "kappa(" + P.label(x) + "," + P.label(x) + ") = " + kappa.at(x, x).to_string() + ", expected 1";
      return c;
    }
  }
  auto product = convolve(kappa, bar(kappa), opts);
  auto diff = first_difference(product, identity_delta(kappa.poset_ptr()));
  if (diff) {
    c.passed = false;
    c.counterexample = diff;
    c.detail = "(kappa * bar kappa)(" + pair_name(P, diff->first, diff->second) +
               ") = " + product.at(diff->first, diff->second).to_string() + ", expected " +
               (diff->first == diff->second ? "1" : "0");
  }
  return c;
}

bool is_kernel(const IncidenceElement& kappa, const ComputeOptions& opts) { return check_kernel(kappa, opts).passed; }

IncidenceElement right_kls(const IncidenceElement& kappa, const ComputeOptions& opts) {
  require_kernel(kappa, opts);
  const RankedPoset& P = kappa.poset();
  return run_recursion(kappa, opts, [&](const IncidenceElement& f, ElementIndex x, ElementIndex w) {
    // Q_{xw} = sum_{x < y <= w} kappa_{xy} f_{yw}
    IntPolynomial q;
    for (ElementIndex y : P.up_set(x)) {
      if (y == x) continue;
      if (y > w) break;
      if (auto yw = P.find_pair(y, w)) q.add_product(kappa[P.pair_index(x, y)], f[*yw]);
    }
    return solve_half(q, P.rank(x, w), P, x, w);
  });
}

IncidenceElement left_kls(const IncidenceElement& kappa, const ComputeOptions& opts) {
  require_kernel(kappa, opts);
  const RankedPoset& P = kappa.poset();
  return run_recursion(kappa, opts, [&](const IncidenceElement& g, ElementIndex x, ElementIndex w) {
    // Q'_{xw} = sum_{x <= y < w} g_{xy} kappa_{yw}
    IntPolynomial q;
    for (ElementIndex y : P.up_set(x)) {
      if (y >= w) break;
      if (auto yw = P.find_pair(y, w)) q.add_product(g[P.pair_index(x, y)], kappa[*yw]);
    }
    return solve_half(q, P.rank(x, w), P, x, w);
  });
}

IncidenceElement kernel_from_right(const IncidenceElement& f, const ComputeOptions& opts) {
  if (!in_half_subring(f)) throw Error(ErrorKind::NotInHalfSubring, "argument is not in the half subring");
  return convolve(bar(f), invert(f, opts), opts);
}

IncidenceElement kernel_from_left(const IncidenceElement& g, const ComputeOptions& opts) {
  if (!in_half_subring(g)) throw Error(ErrorKind::NotInHalfSubring, "argument is not in the half subring");
  return convolve(invert(g, opts), bar(g), opts);
}

IncidenceElement z_function(const IncidenceElement& kappa, const ComputeOptions& opts) {
  auto f = right_kls(kappa, opts);
  auto g = left_kls(kappa, opts);
  auto z = convolve(convolve(g, kappa, opts), f, opts);
  if (!is_symmetric(z)) throw Error(ErrorKind::AntisymmetryFailure, "Z-function is not symmetric");
  if (opts.strict) {
    if (z != convolve(bar(g), f, opts) || z != convolve(g, bar(f), opts))
      throw Error(ErrorKind::AntisymmetryFailure, "Z differs from bar(g) f or g bar(f)");
  }
  return z;
}

KlsPair recover_fg_from_z(const IncidenceElement& z, const ComputeOptions& opts) {
  const RankedPoset& P = z.poset();
  for (ElementIndex x = 0; x < P.size(); ++x)
    if (!z.at(x, x).is_constant(1))
      throw Error(ErrorKind::InvalidArgument, "Z(" + P.label(x) + "," + P.label(x) + ") must be 1");
  if (!is_symmetric(z)) throw Error(ErrorKind::NotSymmetric, "Z is not symmetric under bar");

  IncidenceElement f = identity_delta(z.poset_ptr());
  IncidenceElement g = identity_delta(z.poset_ptr());
  IncidenceElement gbar = identity_delta(z.poset_ptr());
  for (const auto& level : rank_levels(P, opts)) {
    detail::parallel_for(level.size(), opts.threads, [&](std::size_t k) {
      auto [x, w] = level[k];
      const int r = P.rank(x, w);
      PairIndex xw = P.pair_index(x, w);
      // f_{xw} + bar g_{xw} = Z_{xw} - sum_{x<y<w} bar g_{xy} f_{yw}
      IntPolynomial rhs = z[xw];
      IntPolynomial inner;
      for (ElementIndex y : P.up_set(x)) {
        if (y == x) continue;
        if (y >= w) break;
        if (auto yw = P.find_pair(y, w)) inner.add_product(gbar[P.pair_index(x, y)], f[*yw]);
      }
      rhs -= inner;
      if (r % 2 == 0 && rhs.coeff(r / 2) != 0)
        throw Error(ErrorKind::Unsolvable, "interval " + pair_name(P, x, w) + " of rank " + std::to_string(r) +
                                               " has middle coefficient " + rhs.coeff(r / 2).str() +
                                               " at t^" + std::to_string(r / 2));
      if (rhs.degree() > r)
        throw Error(ErrorKind::DegreeExceedsRank, "right-hand side at " + pair_name(P, x, w) + " exceeds rank");
      f[xw] = rhs.truncate_below(half_bound(r));
      std::vector<Integer> gc(static_cast<std::size_t>(half_bound(r)));
      for (int j = 0; j < half_bound(r); ++j) gc[static_cast<std::size_t>(j)] = rhs.coeff(r - j);
      g[xw] = IntPolynomial(std::move(gc));
      gbar[xw] = g[xw].reflect(r);
    });
  }
  if (opts.strict) {
    auto kf = kernel_from_right(f, opts);
    if (kf != kernel_from_left(g, opts) || z_function(kf, opts) != z)
      throw Error(ErrorKind::AntisymmetryFailure, "recovered (f, g) do not reproduce Z");
  }
  return {std::move(f), std::move(g)};
}

bool is_compatible_pair(const IncidenceElement& f, const IncidenceElement& g, const ComputeOptions& opts) {
  return is_symmetric(convolve(bar(g), f, opts));
}

bool row_identity_holds(const IncidenceElement& h, const IncidenceElement& f, ElementIndex x,
                        const ComputeOptions& opts) {
  auto lhs = convolve(bar(h), f, opts);
  auto rhs = convolve(h, bar(f), opts);
  for (ElementIndex z : f.poset().up_set(x))
    if (lhs.at(x, z) != rhs.at(x, z)) return false;
  return true;
}

bool AlternatingDuality::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

AlternatingDuality alternating_duality(const IncidenceElement& kappa, const ComputeOptions& opts) {
  if (!is_alternating(kappa)) throw Error(ErrorKind::NotAlternating, "bar(kappa) != hat(kappa)");
  Check k = check_kernel(kappa, opts);
  if (!k.passed) throw Error(ErrorKind::NotAKernel, k.detail);
  auto f = right_kls(kappa, opts);
  auto g = left_kls(kappa, opts);
  auto delta = identity_delta(kappa.poset_ptr());
  auto identity_check = [&](std::string name, const IncidenceElement& product) {
    Check c{std::move(name), true, std::nullopt, ""};
    if (auto d = first_difference(product, delta)) {
      c.passed = false;
      c.counterexample = d;
      c.detail = "entry " + pair_name(kappa.poset(), d->first, d->second) + " = " +
                 product.at(d->first, d->second).to_string();
    }
    return c;
  };
  AlternatingDuality out{f, g, {}};
  out.checks.push_back(identity_check("hat(g) * f == delta", convolve(hat(g), f, opts)));
  out.checks.push_back(identity_check("hat(f) * g == delta", convolve(hat(f), g, opts)));
  return out;
}

IncidenceElement batyrev_borisov(const IncidenceElement& kappa, const ComputeOptions& opts) {
  auto f = right_kls(kappa, opts);
  auto g = left_kls(kappa, opts);
  return convolve(f, bar(g), opts);
}

}  // namespace kls

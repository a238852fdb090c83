#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "kls/error.hpp"
#include "kls/incidence.hpp"
#include "kls/poset.hpp"

namespace test {

// Kind of the kls::Error thrown by fn; fails the test if nothing is thrown.
template <class Fn>
kls::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const kls::Error& e) {
    return e.kind();
  }
  FAIL("expected a kls::Error");
  return kls::ErrorKind::InternalAssertion;
}

inline kls::PosetPtr chain(int length, int cover_rank = 1) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> rel;
  kls::RankPairs ranks;
  for (int i = 0; i <= length; ++i) el.push_back(std::to_string(i));
  for (int i = 0; i < length; ++i) {
    rel.emplace_back(el[i], el[i + 1]);
    ranks[{el[i], el[i + 1]}] = cover_rank;
  }
  return kls::build_poset(el, rel, ranks);
}

// Boolean lattice on n atoms; labels are bit masks.
inline kls::PosetPtr boolean_lattice(int n) {
  std::vector<std::string> el;
  std::vector<std::pair<std::string, std::string>> rel;
  kls::RankPairs ranks;
  for (int s = 0; s < (1 << n); ++s) el.push_back("s" + std::to_string(s));
  for (int s = 0; s < (1 << n); ++s)
    for (int i = 0; i < n; ++i)
      if (!(s >> i & 1)) {
        rel.emplace_back(el[s], el[s | 1 << i]);
        ranks[{el[s], el[s | 1 << i]}] = 1;
      }
  return kls::build_poset(el, rel, ranks);
}

// Random element of the rank subring: deg f_{xy} <= r_{xy}, small coefficients.
inline kls::IncidenceElement random_element(const kls::PosetPtr& p, std::mt19937_64& rng, bool unit_diagonal) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  kls::IncidenceElement f(p);
  for (kls::PairIndex i = 0; i < p->num_pairs(); ++i) {
    auto [x, y] = p->pairs()[i];
    if (x == y && unit_diagonal) {
      f[i] = kls::IntPolynomial{1};
      continue;
    }
    std::vector<kls::Integer> c;
    for (int d = 0; d <= p->rank(x, y); ++d) c.emplace_back(coeff(rng));
    f[i] = kls::IntPolynomial(std::move(c));
  }
  return f;
}

// Random element of the half subring.
inline kls::IncidenceElement random_half(const kls::PosetPtr& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  kls::IncidenceElement f(p);
  for (kls::PairIndex i = 0; i < p->num_pairs(); ++i) {
    auto [x, y] = p->pairs()[i];
    if (x == y) {
      f[i] = kls::IntPolynomial{1};
      continue;
    }
    std::vector<kls::Integer> c;
    for (int d = 0; 2 * d < p->rank(x, y); ++d) c.emplace_back(coeff(rng));
    f[i] = kls::IntPolynomial(std::move(c));
  }
  return f;
}

inline kls::IntPolynomial poly(std::vector<long long> c) {
  std::vector<kls::Integer> v(c.begin(), c.end());
  return kls::IntPolynomial(std::move(v));
}

}  // namespace test

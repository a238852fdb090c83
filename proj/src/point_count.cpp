#include "kls/point_count.hpp"

#include "kls/error.hpp"

namespace kls {

std::uint64_t count_complement_points(const Columns& columns, long long p, ElementSet F, ElementSet G,
                                      std::uint64_t max_points) {
  auto m = Matroid::from_matrix(columns, Field::mod(p));
  if ((F & ~G) != 0) throw Error(ErrorKind::NotAFlat, "F is not contained in G");
  if (!m.is_flat(F)) throw Error(ErrorKind::NotAFlat, format_set(F, m.labels()) + " is not a flat over F_" + std::to_string(p));
  if (!m.is_flat(G)) throw Error(ErrorKind::NotAFlat, format_set(G, m.labels()) + " is not a flat over F_" + std::to_string(p));

  const std::size_t dim = columns[0].size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > max_points / static_cast<std::uint64_t>(p))
      throw Error(ErrorKind::FieldTooLarge, "enumeration of F_" + std::to_string(p) + "^" + std::to_string(dim) +
                                                " exceeds the budget of " + std::to_string(max_points) + " points");
    total *= static_cast<std::uint64_t>(p);
  }

  std::vector<std::vector<long long>> forms;
  for (const auto& c : columns) {
    std::vector<long long> r;
    for (long long e : c) r.push_back(((e % p) + p) % p);
    forms.push_back(std::move(r));
  }

  std::vector<long long> v(dim, 0);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = static_cast<long long>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    bool keep = true;
    for (std::size_t i = 0; i < forms.size() && keep; ++i) {
      const ElementSet bit = ElementSet{1} << i;
      if (!(G & bit)) continue;
      long long dot = 0;
      for (std::size_t k = 0; k < dim; ++k) dot = (dot + forms[i][k] * v[k]) % p;
      keep = (F & bit) ? dot == 0 : dot != 0;
    }
    count += keep;
  }

  // Each class of V^F / V^G has |V^G| = p^(dim - rk G) representatives.
  std::uint64_t fibre = 1;
  for (int i = 0; i < static_cast<int>(dim) - m.rank(G); ++i) fibre *= static_cast<std::uint64_t>(p);
  if (count % fibre != 0) throw Error(ErrorKind::InternalAssertion, "point count is not a multiple of |V^G|");
  return count / fibre;
}

bool realization_valid_mod(const Columns& columns, long long p) {
  auto over_q = Matroid::from_matrix(columns, Field::rationals());
  auto over_p = Matroid::from_matrix(columns, Field::mod(p));
  const ElementSet count = ElementSet{1} << columns.size();
  for (ElementSet s = 0; s < count; ++s)
    if (over_q.rank(s) != over_p.rank(s)) return false;
  return true;
}

std::vector<Check> crapo_cross_check(const Columns& columns, Field field, const std::vector<long long>& qs,
                                     const ComputeOptions& opts) {
  auto m = Matroid::from_matrix(columns, field);
  auto lattice = lattice_of_flats(m);
  auto chi = characteristic_kernel(lattice.poset, opts);
  const RankedPoset& L = *lattice.poset;
  std::vector<Check> out;
  for (long long q : qs) {
    Check c{"chi_FG(" + std::to_string(q) + ") == |complement over F_" + std::to_string(q) + "|", true, std::nullopt,
            ""};
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
    bool valid = field.prime ? *field.prime == q
                             : realization_valid_mod(columns, q);
    if (!valid) {
      c.detail = "skipped: matrix does not realize the same matroid over F_" + std::to_string(q);
      out.push_back(std::move(c));
      continue;
    }
    std::size_t pairs_checked = 0;
    for (PairIndex p = 0; p < L.num_pairs() && c.passed; ++p) {
      auto [F, G] = L.pairs()[p];
      Integer expected = chi[p].evaluate(q);
      std::uint64_t counted = count_complement_points(columns, q, lattice.flats[F], lattice.flats[G]);
      ++pairs_checked;
      if (expected != counted) {
        c.passed = false;
        c.counterexample = ElementPair{F, G};
        c.detail = "chi(" + std::to_string(q) + ") = " + expected.str() + " but counted " + std::to_string(counted) +
                   " at " + L.label(F) + "<" + L.label(G);
      }
    }
    if (c.passed) c.detail = std::to_string(pairs_checked) + " flat pairs";
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace kls

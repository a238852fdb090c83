#include <doctest.h>

#include <bit>

#include "helpers.hpp"
#include "kls/engine.hpp"
#include "kls/matroid.hpp"
#include "oracles.hpp"

using namespace kls;

namespace {

Matroid k4() { return Matroid::graphic({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Matroid k3() { return Matroid::graphic({{0, 1}, {0, 2}, {1, 2}}); }

// Isomorphism of two flat lattices given as rank-preserving bijection search
// (small sizes only).
bool isomorphic(const RankedPoset& a, const RankedPoset& b) {
  if (a.size() != b.size() || a.num_pairs() != b.num_pairs()) return false;
  std::vector<ElementIndex> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (ElementIndex x = 0; x < a.size() && ok; ++x)
      for (ElementIndex y = 0; y < a.size() && ok; ++y) {
        bool la = a.leq(x, y), lb = b.leq(perm[x], perm[y]);
        ok = la == lb && (!la || a.rank(x, y) == b.rank(perm[x], perm[y]));
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("uniform matroid ranks") {
  auto m = Matroid::uniform(4, 2);
  CHECK(m.ground_size() == 4);
  CHECK(m.rank(0) == 0);
  CHECK(m.rank(0b1) == 1);
  CHECK(m.rank(0b111) == 2);
  CHECK(m.full_rank() == 2);
  CHECK(m.closure(0b11) == 0b1111);
  CHECK(m.is_flat(0b1));
  CHECK_FALSE(m.has_loops());
  CHECK(test::kind_of([] { Matroid::uniform(2, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("matroid axioms hold for every constructor") {
  for (const auto& m : {Matroid::uniform(5, 3), k4(), Matroid::from_matrix({{1, 0}, {0, 1}, {1, 1}, {1, 2}}, Field::mod(3)),
                        Matroid::from_matrix({{1, -1, 0}, {0, 1, -1}, {1, 0, -1}, {0, 0, 0}}, Field::rationals())})
    CHECK(verify_matroid_axioms(m).passed);
  CHECK(test::kind_of([] { verify_matroid_axioms(Matroid::uniform(20, 2)); }) == ErrorKind::TooLarge);
}

TEST_CASE("matrix matroids") {
  // three pairwise independent columns in F_5^2 give U_{2,3}
  auto m = Matroid::from_matrix({{1, 0}, {0, 1}, {1, 2}}, Field::mod(5));
  for (ElementSet s = 0; s < 8; ++s) CHECK(m.rank(s) == std::min(std::popcount(s), 2));
  // identity over Q: free matroid, flats are all subsets
  auto free3 = Matroid::from_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Field::rationals());
  auto lat = lattice_of_flats(free3);
  CHECK(lat.poset->size() == 8);
  CHECK(isomorphic(*lat.poset, *test::boolean_lattice(3)));
  // a zero column is a loop
  auto looped = Matroid::from_matrix({{1, 0}, {0, 0}}, Field::rationals());
  CHECK(looped.has_loops());
  CHECK(looped.loops() == 0b10);
  // characteristic matters: (1,1) and (1,-1) are parallel mod 2 only
  CHECK(vector_rank({{1, 1}, {1, -1}}, Field::rationals()) == 2);
  CHECK(vector_rank({{1, 1}, {1, -1}}, Field::mod(2)) == 1);
  CHECK(vector_rank({{2, 4}, {3, 6}}, Field::rationals()) == 1);
  CHECK(test::kind_of([] { Matroid::from_matrix({{1}, {1}}, Field::mod(4)); }) == ErrorKind::NotPrime);
  CHECK(test::kind_of([] { Matroid::from_matrix({{1}, {1, 0}}, Field::rationals()); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(m.realization().has_value());
  CHECK_FALSE(k4().realization().has_value());
}

TEST_CASE("lattices of flats") {
  auto u23 = lattice_of_flats(Matroid::uniform(3, 2));
  CHECK(u23.poset->size() == 5);
  CHECK(u23.poset->labels().front() == "0");
  CHECK(u23.poset->labels().back() == "1");
  CHECK(u23.poset->interval("{0}", "1").size() == 2);
  CHECK(u23.poset->rank(u23.poset->index_of("{0}"), u23.poset->index_of("1")) == 1);
  CHECK(u23.doubled->rank(0, 4) == 4);

  auto u11 = lattice_of_flats(Matroid::uniform(1, 1));
  CHECK(u11.poset->size() == 2);

  CHECK(isomorphic(*lattice_of_flats(k3()).poset, *u23.poset));
  auto k4l = lattice_of_flats(k4());
  CHECK(k4l.poset->size() == 15);  // 1 + 6 + 7 + 1
  CHECK(k4l.poset->rank(0, 14) == 3);

  // bottom is the closure of the empty set even with loops
  auto looped = lattice_of_flats(Matroid::from_matrix({{1, 0}, {0, 0}, {0, 1}}, Field::rationals()));
  CHECK(looped.has_loops);
  CHECK(looped.flats.front() == 0b010);
  CHECK(looped.poset->size() == 4);
}

TEST_CASE("flats of a uniform matroid: small subsets are flats") {
  // U_{k,n} is paving: every subset of size < k is a flat, and those are all proper flats.
  for (auto [n, k] : {std::pair{5, 3}, std::pair{4, 2}, std::pair{6, 4}}) {
    auto m = Matroid::uniform(n, k);
    auto lat = lattice_of_flats(m);
    std::size_t expected = 1;
    for (ElementSet s = 0; s < (ElementSet{1} << n); ++s)
      if (std::popcount(s) < k) {
        CHECK(m.is_flat(s));
        ++expected;
      }
    CHECK(lat.poset->size() == expected);
  }
}

TEST_CASE("intervals of flat lattices are atomic") {
  for (const auto& m : {k4(), Matroid::uniform(4, 3), Matroid::uniform(5, 2)}) {
    auto lat = lattice_of_flats(m);
    const auto& P = *lat.poset;
    for (auto [f, g] : P.pairs()) {
      if (f == g) continue;
      ElementSet join = lat.flats[f];
      for (ElementIndex a : P.up_set(f))
        if (P.leq(a, g) && P.rank(f, a) == 1) join = m.closure(join | lat.flats[a]);
      CHECK(join == lat.flats[g]);
    }
  }
}

TEST_CASE("characteristic kernel") {
  auto c = test::chain(1);
  CHECK(characteristic_kernel(c).at(0, 1) == test::poly({-1, 1}));
  auto u23 = lattice_of_flats(Matroid::uniform(3, 2));
  auto mu = mobius(u23.poset);
  CHECK(mu.at("0", "0") == IntPolynomial{1});
  CHECK(mu.at("0", "{1}") == IntPolynomial{-1});
  CHECK(mu.at("0", "1") == IntPolynomial{2});
  for (const auto& m : {Matroid::uniform(3, 2), Matroid::uniform(4, 3), Matroid::uniform(3, 3), k4()}) {
    auto lat = lattice_of_flats(m);
    auto chi = characteristic_kernel(lat.poset);
    CHECK(is_kernel(chi));
    CHECK(left_kls(chi) == zeta(lat.poset));
    auto brute = oracle::characteristic(*lat.poset);
    for (auto [x, y] : lat.poset->pairs()) {
      oracle::Poly got;
      for (const auto& v : chi.at(x, y).coeffs()) got.push_back(static_cast<long long>(v));
      CHECK(got == brute(x, y));
    }
  }
  auto top = [](const Matroid& m) {
    auto lat = lattice_of_flats(m);
    return characteristic_kernel(lat.poset).at(0, lat.poset->size() - 1);
  };
  CHECK(top(Matroid::uniform(3, 3)) == test::poly({-1, 3, -3, 1}));
  CHECK(top(Matroid::uniform(4, 3)) == test::poly({-3, 6, -4, 1}));
  CHECK(top(k4()) == test::poly({-6, 11, -6, 1}));
}

TEST_CASE("matroid KL and Z polynomials") {
  CHECK(matroid_kl(Matroid::uniform(1, 1)) == IntPolynomial{1});
  CHECK(matroid_kl(Matroid::uniform(3, 2)) == IntPolynomial{1});
  CHECK(matroid_kl(Matroid::uniform(3, 3)) == IntPolynomial{1});
  CHECK(matroid_kl(Matroid::uniform(4, 3)) == test::poly({1, 2}));
  CHECK(matroid_kl(k4()) == test::poly({1, 1}));
  CHECK(matroid_z(Matroid::uniform(1, 1)) == test::poly({1, 1}));
  CHECK(matroid_z(Matroid::uniform(3, 2)) == test::poly({1, 3, 1}));
  CHECK(matroid_z(Matroid::uniform(3, 3)) == test::poly({1, 3, 3, 1}));
  CHECK(matroid_z(Matroid::uniform(4, 3)) == test::poly({1, 6, 6, 1}));
  CHECK(matroid_z(Matroid::uniform(4, 2)) == test::poly({1, 4, 1}));
  CHECK(matroid_z(k4()) == test::poly({1, 7, 7, 1}));
  CHECK(matroid_z(Matroid::uniform(0, 0)) == IntPolynomial{1});
  // loops do not change the lattice of flats
  auto looped = Matroid::from_matrix({{1, 0}, {0, 0}, {0, 1}, {1, 1}}, Field::rationals());
  CHECK(matroid_kl(looped) == matroid_kl(Matroid::uniform(3, 2)));
  CHECK(matroid_z(looped) == matroid_z(Matroid::uniform(3, 2)));
}

TEST_CASE("format_set") {
  std::vector<std::string> labels{"0", "1", "2"};
  CHECK(format_set(0b101, labels) == "{0,2}");
}

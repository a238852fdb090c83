#include <doctest.h>

#include "helpers.hpp"
#include "kls/engine.hpp"
#include "kls/hypertoric.hpp"
#include "kls/matroid.hpp"
#include "oracles.hpp"

using namespace kls;

namespace {

oracle::Poly coeffs(const IntPolynomial& p) {
  oracle::Poly out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long long>(c));
  return out;
}

std::vector<Matroid> zoo() {
  return {Matroid::uniform(1, 1), Matroid::uniform(3, 2), Matroid::uniform(4, 2),
          Matroid::graphic({{0, 1}, {0, 2}, {1, 2}}),
          Matroid::graphic({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), Matroid::uniform(4, 3)};
}

// Direct summation of the kernel formula from the brute-force characteristic function.
oracle::Poly hypertoric_entry(const RankedPoset& L, oracle::Entry& chi, ElementIndex f, ElementIndex h) {
  oracle::Poly sum;
  for (ElementIndex g = 0; g < L.size(); ++g) {
    if (!L.leq(f, g) || !L.leq(g, h)) continue;
    long long sign = L.rank(f, g) % 2 ? -1 : 1;
    sum = oracle::add(sum, oracle::scale(chi(g, h), sign * oracle::eval(chi(f, g), -1)));
  }
  return oracle::mul(oracle::power({-1, 1}, L.rank(f, h)), sum);
}

}  // namespace

TEST_CASE("hypertoric kernel on U_{1,1}") {
  auto lat = lattice_of_flats(Matroid::uniform(1, 1));
  auto k = hypertoric_kernel(lat);
  CHECK(k.poset().rank(0, 1) == 2);
  CHECK(k.at(0, 0) == IntPolynomial{1});
  CHECK(k.at(0, 1) == test::poly({-1, 0, 1}));
  CHECK(broken_circuit_h(lat).at(0, 1) == IntPolynomial{1});
}

TEST_CASE("hypertoric kernel matches direct summation") {
  for (const auto& m : zoo()) {
    CAPTURE(m.description());
    auto lat = lattice_of_flats(m);
    auto chi = oracle::characteristic(*lat.poset);
    auto k = hypertoric_kernel(lat);
    CHECK(is_kernel(k));
    for (auto [f, h] : lat.poset->pairs()) CHECK(coeffs(k.at(f, h)) == hypertoric_entry(*lat.poset, chi, f, h));
  }
}

TEST_CASE("broken circuit h is the left KLS-function of the hypertoric kernel") {
  for (const auto& m : zoo()) {
    CAPTURE(m.description());
    auto lat = lattice_of_flats(m);
    auto h = broken_circuit_h(lat);
    CHECK(in_half_subring(h));
    CHECK(left_kls(hypertoric_kernel(lat)) == h);
  }
}

TEST_CASE("broken circuit h values") {
  auto lat = lattice_of_flats(Matroid::uniform(3, 2));
  CHECK(broken_circuit_h(lat).at("0", "1") == test::poly({1, 1}));
  auto b3 = lattice_of_flats(Matroid::uniform(3, 3));
  // free matroid: chi = (t-1)^3, so h = 1
  CHECK(broken_circuit_h(b3).at(0, b3.poset->size() - 1) == IntPolynomial{1});
  auto k4 = lattice_of_flats(Matroid::graphic({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(broken_circuit_h(k4).at(0, k4.poset->size() - 1) == test::poly({1, 3, 2}));
}

TEST_CASE("the doubled poset must match the lattice") {
  auto c = test::chain(2);
  CHECK(test::kind_of([&] { hypertoric_kernel(c, c); }) == ErrorKind::PosetMismatch);
  CHECK(test::kind_of([&] { hypertoric_kernel(c, scale_rank(*test::chain(3), 2)); }) == ErrorKind::PosetMismatch);
}

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "kls/bruhat.hpp"
#include "kls/engine.hpp"
#include "oracles.hpp"

using namespace kls;

namespace {

oracle::Poly coeffs(const IntPolynomial& p) {
  oracle::Poly out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long long>(c));
  return out;
}

}  // namespace

TEST_CASE("length and Bruhat comparison") {
  CHECK(coxeter_length({1, 2, 3}) == 0);
  CHECK(coxeter_length({3, 2, 1}) == 3);
  CHECK(coxeter_length({2, 1, 4, 3}) == 2);
  CHECK(bruhat_leq({1, 2, 3}, {3, 2, 1}));
  CHECK_FALSE(bruhat_leq({2, 1, 3}, {1, 3, 2}));
  CHECK(bruhat_leq({2, 1, 3}, {3, 1, 2}));
}

TEST_CASE("tableau criterion agrees with the sorted-prefix criterion") {
  for (int n = 2; n <= 5; ++n) {
    Permutation v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> all;
    do all.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    for (const auto& a : all)
      for (const auto& b : all) REQUIRE(bruhat_leq(a, b) == oracle::RightDescentR::leq(a, b));
  }
}

TEST_CASE("S_3 shape") {
  auto b = bruhat(3);
  CHECK(b.poset->size() == 6);
  CHECK(b.poset->labels().front() == "123");
  CHECK(b.poset->labels().back() == "321");
  CHECK(b.poset->rank(0, 5) == 3);
  CHECK(b.poset->minimum() == ElementIndex{0});
  CHECK(b.poset->maximum() == ElementIndex{5});
}

TEST_CASE("R-polynomials") {
  auto b2 = bruhat(2);
  CHECK(b2.r_polynomials.at("12", "21") == test::poly({-1, 1}));
  CHECK(bruhat(3).r_polynomials.at("123", "321") == test::poly({-1, 2, -2, 1}));
  CHECK(bruhat(4).r_polynomials.at("1234", "4321") == test::poly({1, -3, 4, -4, 4, -3, 1}));
  for (int n = 2; n <= 4; ++n) {
    auto b = bruhat(n);
    oracle::RightDescentR brute;
    for (auto [v, w] : b.poset->pairs()) {
      const auto& r = b.r_polynomials.at(v, w);
      CHECK(coeffs(r) == brute(b.elements[v], b.elements[w]));
      CHECK(r.degree() == b.poset->rank(v, w));
      CHECK(r.coeff(r.degree()) == 1);
    }
    CHECK(is_kernel(b.r_polynomials));
    CHECK(is_alternating(b.r_polynomials));
  }
}

TEST_CASE("Bruhat order from covers matches the tableau criterion") {
  for (int n = 1; n <= 4; ++n) CHECK(*bruhat_from_covers(n) == *bruhat(n).poset);
}

TEST_CASE("KL polynomials") {
  for (int n = 2; n <= 3; ++n) {
    auto b = bruhat(n);
    auto f = right_kls(b.r_polynomials);
    for (PairIndex i = 0; i < b.poset->num_pairs(); ++i) CHECK(f[i] == IntPolynomial{1});
  }
  auto b4 = bruhat(4);
  auto f = right_kls(b4.r_polynomials);
  int nontrivial = 0;
  for (PairIndex i = 0; i < b4.poset->num_pairs(); ++i)
    if (f[i] != IntPolynomial{1}) {
      ++nontrivial;
      CHECK(f[i] == test::poly({1, 1}));
    }
  CHECK(nontrivial == 6);
  CHECK(f.at("1234", "3412") == test::poly({1, 1}));
  CHECK(f.at("1234", "4231") == test::poly({1, 1}));
  CHECK(f.at("1243", "4231") == test::poly({1, 1}));
  oracle::RightKls brute(*b4.poset, [&](ElementIndex x, ElementIndex y) { return coeffs(b4.r_polynomials.at(x, y)); });
  for (auto [v, w] : b4.poset->pairs()) CHECK(coeffs(f.at(v, w)) == brute(v, w));
}

TEST_CASE("w0 duality") {
  for (int n = 2; n <= 4; ++n) {
    auto checks = w0_duality_check(bruhat(n));
    REQUIRE(checks.size() == 2);
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.property << ": " << c.detail);
  }
}

TEST_CASE("alternating duality on R") {
  for (int n = 2; n <= 4; ++n) CHECK(alternating_duality(bruhat(n).r_polynomials).passed());
}

TEST_CASE("size limits") {
  CHECK(test::kind_of([] { bruhat(7); }) == ErrorKind::TooLarge);
  CHECK(bruhat(1).poset->size() == 1);
}

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kls/error.hpp"
#include "kls/polynomial.hpp"

using kls::IntPolynomial;
using kls::Integer;

TEST_CASE("polynomials are stored trimmed") {
  IntPolynomial p{2, -3, 1, 0, 0};
  CHECK(p.degree() == 2);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK((p - p).is_zero());
}

TEST_CASE("arithmetic") {
  IntPolynomial a{-1, 1};  // t - 1
  IntPolynomial b{1, 1};   // t + 1
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(a + b == IntPolynomial{0, 2});
  CHECK(-a == IntPolynomial{1, -1});
  CHECK(IntPolynomial::binomial_power(-1, 3) == IntPolynomial{-1, 3, -3, 1});
  CHECK(IntPolynomial::binomial_power(1, 0) == IntPolynomial{1});
  CHECK(IntPolynomial{2, -3, 1}.evaluate(5) == 12);
  CHECK(IntPolynomial{2, -3, 1}.to_string() == "t^2 - 3*t + 2");
  CHECK(IntPolynomial{0, -1}.to_string() == "-t");
}

TEST_CASE("reflection within a rank window") {
  CHECK(IntPolynomial{0, 1}.reflect(3) == IntPolynomial{0, 0, 1});
  CHECK(IntPolynomial{1}.reflect(2) == IntPolynomial{0, 0, 1});
  CHECK(IntPolynomial{}.reflect(2).is_zero());
  CHECK_THROWS_AS(IntPolynomial({0, 0, 0, 1}).reflect(2), kls::Error);
  CHECK(IntPolynomial{1, 2, 3, 4}.truncate_below(2) == IntPolynomial{1, 2});
}

TEST_CASE("coefficients grow past 64 bits without wrapping") {
  IntPolynomial p = IntPolynomial::binomial_power(1, 200);
  Integer middle = p.coeff(100);
  CHECK(middle > Integer(std::numeric_limits<long long>::max()));
  CHECK(middle > 0);
  CHECK(p.evaluate(1) == Integer(1) << 200);
}

TEST_CASE("multiplication agrees with evaluation (property)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> a(len(rng)), b(len(rng));
    for (auto& v : a) v = c(rng);
    for (auto& v : b) v = c(rng);
    auto pa = test::poly(a);
    auto pb = test::poly(b);
    for (int t = -3; t <= 3; ++t) {
      CHECK((pa * pb).evaluate(t) == pa.evaluate(t) * pb.evaluate(t));
      CHECK((pa + pb).evaluate(t) == pa.evaluate(t) + pb.evaluate(t));
    }
  }
}

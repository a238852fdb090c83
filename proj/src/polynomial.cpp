#include "kls/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "kls/error.hpp"

namespace kls {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial degree");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial_power(long long a, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  // Pascal row scaled by powers of a.
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  Integer binom = 1;
  Integer apow = 1;
  for (int k = 0; k <= n; ++k) {
    // coefficient of t^(n-k) is C(n,k) a^k
    v[static_cast<std::size_t>(n - k)] = binom * apow;
    binom = binom * (n - k) / (k + 1);
    apow *= a;
  }
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool IntPolynomial::is_constant(long long c) const {
  if (c == 0) return coeffs_.empty();
  return coeffs_.size() == 1 && coeffs_[0] == c;
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::reflect(int window) const {
  if (degree() > window) {
    throw Error(ErrorKind::DegreeExceedsRank,
                "degree " + std::to_string(degree()) + " exceeds window " + std::to_string(window));
  }
  if (is_zero()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(window) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<std::size_t>(window) - i] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::truncate_below(int bound) const {
  if (bound <= 0) return {};
  auto n = std::min<std::size_t>(coeffs_.size(), static_cast<std::size_t>(bound));
  return IntPolynomial(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative shift");
  if (is_zero()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

void IntPolynomial::add_product(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return;
  std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < n) coeffs_.resize(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  trim();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  r.add_product(a, b);
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag;
      if (i > 0) os << '*';
    }
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace kls

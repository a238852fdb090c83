#include "kls/bruhat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kls/error.hpp"

namespace kls {

namespace {

std::string one_line(const Permutation& w) {
  std::string s;
  for (int v : w) s += std::to_string(v);
  return s;
}

std::vector<Permutation> all_permutations_by_length(int n) {
  Permutation w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return coxeter_length(a) < coxeter_length(b); });
  return out;
}

void check_degree(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "symmetric group degree must be >= 1");
  if (n > 6) throw Error(ErrorKind::TooLarge, "Bruhat posets are limited to n <= 6");
}

// Left multiplication by s_i swaps the values i and i+1.
Permutation swap_values(Permutation w, int i) {
  for (int& v : w) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return w;
}

// s_i is a left descent of w when i+1 appears before i.
bool has_left_descent(const Permutation& w, int i) {
  auto pos_i = std::find(w.begin(), w.end(), i);
  auto pos_next = std::find(w.begin(), w.end(), i + 1);
  return pos_next < pos_i;
}

Permutation left_multiply_w0(const Permutation& w) {
  Permutation out = w;
  const int n = static_cast<int>(w.size());
  for (int& v : out) v = n + 1 - v;
  return out;
}

}  // namespace

int coxeter_length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  const int n = static_cast<int>(v.size());
  for (int k = 1; k <= n; ++k) {
    int cv = 0;
    int cw = 0;
    for (int i = 0; i < n; ++i) {
      cv += v[static_cast<std::size_t>(i)] >= k;
      cw += w[static_cast<std::size_t>(i)] >= k;
      if (cv > cw) return false;
    }
  }
  return true;
}

BruhatData bruhat(int n, const ComputeOptions& opts) {
  check_degree(n);
  auto perms = all_permutations_by_length(n);
  std::vector<std::string> labels;
  std::vector<int> grade;
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    labels.push_back(one_line(perms[a]));
    grade.push_back(coxeter_length(perms[a]));
    for (std::size_t b = 0; b < perms.size(); ++b)
      if (a != b && bruhat_leq(perms[a], perms[b])) relations.emplace_back(a, b);
  }
  auto poset = build_graded_poset(labels, relations, grade);

  std::map<Permutation, ElementIndex> index;
  std::vector<Permutation> elements(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    auto idx = poset->index_of(labels[a]);
    index[perms[a]] = idx;
    elements[idx] = perms[a];
  }

  // Columns w in increasing length, so R_{., sw} is ready before R_{., w}.
  IncidenceElement R(poset);
  auto lookup = [&](const Permutation& v, const Permutation& w) -> const IntPolynomial* {
    auto p = poset->find_pair(index.at(v), index.at(w));
    return p ? &R[*p] : nullptr;
  };
  const IntPolynomial t_minus_1{-1, 1};
  const IntPolynomial t{0, 1};
  for (ElementIndex wi = 0; wi < poset->size(); ++wi) {
    const Permutation& w = elements[wi];
    int s = 0;
    for (int i = 1; i < n && s == 0; ++i)
      if (has_left_descent(w, i)) s = i;
    for (ElementIndex vi : poset->down_set(wi)) {
      const Permutation& v = elements[vi];
      IntPolynomial value;
      if (vi == wi) {
        value = IntPolynomial{1};
      } else {
        Permutation sw = swap_values(w, s);
        Permutation sv = swap_values(v, s);
        if (has_left_descent(v, s)) {
          if (auto p = lookup(sv, sw)) value = *p;
        } else {
          if (auto p = lookup(v, sw)) value += t_minus_1 * *p;
          if (auto p = lookup(sv, sw)) value += t * *p;
        }
      }
      R.set(vi, wi, std::move(value));
    }
  }

  Check k = check_kernel(R, opts);
  if (!k.passed) throw Error(ErrorKind::InternalAssertion, "R-polynomials fail the kernel test: " + k.detail);
  if (!is_alternating(R)) throw Error(ErrorKind::InternalAssertion, "R-polynomials are not alternating");
  return BruhatData{n, poset, std::move(elements), std::move(R)};
}

PosetPtr bruhat_from_covers(int n) {
  check_degree(n);
  auto perms = all_permutations_by_length(n);
  std::map<Permutation, std::size_t> pos;
  std::vector<std::string> labels;
  std::vector<int> grade;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    pos[perms[a]] = a;
    labels.push_back(one_line(perms[a]));
    grade.push_back(coxeter_length(perms[a]));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t i = 0; i < perms[a].size(); ++i) {
      for (std::size_t j = i + 1; j < perms[a].size(); ++j) {
        Permutation u = perms[a];
        std::swap(u[i], u[j]);
        if (coxeter_length(u) == grade[a] + 1) covers.emplace_back(a, pos[u]);
      }
    }
  }
  return build_graded_poset(labels, covers, grade);
}

std::vector<Check> w0_duality_check(const BruhatData& data, const ComputeOptions& opts) {
  const RankedPoset& P = *data.poset;
  std::map<Permutation, ElementIndex> index;
  for (ElementIndex i = 0; i < data.elements.size(); ++i) index[data.elements[i]] = i;
  auto f = right_kls(data.r_polynomials, opts);
  auto g = left_kls(data.r_polynomials, opts);
  Check r_check{"R_{vw} == R_{(w0 w)(w0 v)}", true, std::nullopt, ""};
  Check g_check{"g_{vw} == f_{(w0 w)(w0 v)}", true, std::nullopt, ""};
  for (auto [v, w] : P.pairs()) {
    ElementIndex dv = index.at(left_multiply_w0(data.elements[v]));
    ElementIndex dw = index.at(left_multiply_w0(data.elements[w]));
    if (!P.leq(dw, dv)) {
      throw Error(ErrorKind::InternalAssertion, "left multiplication by w0 is not order reversing");
    }
    if (r_check.passed && data.r_polynomials.at(v, w) != data.r_polynomials.at(dw, dv)) {
      r_check.passed = false;
      r_check.counterexample = ElementPair{v, w};
      r_check.detail = "at " + P.label(v) + "<" + P.label(w);
    }
    if (g_check.passed && g.at(v, w) != f.at(dw, dv)) {
      g_check.passed = false;
      g_check.counterexample = ElementPair{v, w};
      g_check.detail = "at " + P.label(v) + "<" + P.label(w);
    }
  }
  return {r_check, g_check};
}

}  // namespace kls

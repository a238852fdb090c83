#include "kls/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "kls/error.hpp"

namespace kls {

namespace {

constexpr std::size_t kMaxGround = 64;

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

long long mod_pow(long long b, long long e, long long p) {
  __int128 result = 1;
  __int128 base = b % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<long long>(result);
}

int rank_mod_p(std::vector<std::vector<long long>> rows, long long p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    long long inv = mod_pow(prow[c], p - 2, p);
    for (auto& v : prow) v = static_cast<long long>(static_cast<__int128>(v) * inv % p);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      long long factor = rows[r][c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = mod_reduce(rows[r][k] - static_cast<long long>(static_cast<__int128>(factor) * prow[k] % p), p);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination over the integers.
int rank_rational(const std::vector<std::vector<long long>>& input) {
  if (input.empty()) return 0;
  const std::size_t cols = input[0].size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : input) rows.emplace_back(r.begin(), r.end());
  Integer prev = 1;
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) rows[r][k] = (prow[c] * rows[r][k] - rows[r][c] * prow[k]) / prev;
      rows[r][c] = 0;
    }
    prev = prow[c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::string Field::name() const { return prime ? "F_" + std::to_string(*prime) : "Q"; }

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int vector_rank(const Columns& vectors, Field field) {
  if (field.prime) {
    std::vector<std::vector<long long>> rows;
    for (const auto& v : vectors) {
      std::vector<long long> r;
      for (long long e : v) r.push_back(mod_reduce(e, *field.prime));
      rows.push_back(std::move(r));
    }
    return rank_mod_p(std::move(rows), *field.prime);
  }
  return rank_rational(vectors);
}

Matroid::Matroid(std::vector<std::string> labels, std::function<int(ElementSet)> oracle, std::string description)
    : labels_(std::move(labels)), oracle_(std::move(oracle)), description_(std::move(description)) {
  if (labels_.size() > kMaxGround)
    throw Error(ErrorKind::TooLarge, "ground sets are limited to " + std::to_string(kMaxGround) + " elements");
}

ElementSet Matroid::ground() const noexcept {
  return labels_.size() >= 64 ? ~ElementSet{0} : (ElementSet{1} << labels_.size()) - 1;
}

ElementSet Matroid::closure(ElementSet s) const {
  const int r = rank(s);
  ElementSet out = s;
  for (std::size_t e = 0; e < ground_size(); ++e) {
    ElementSet bit = ElementSet{1} << e;
    if (!(s & bit) && rank(s | bit) == r) out |= bit;
  }
  return out;
}

Matroid Matroid::from_matrix(const Columns& columns, Field field) {
  if (columns.empty()) throw Error(ErrorKind::InvalidArgument, "matrix matroid needs at least one column");
  const std::size_t dim = columns[0].size();
  for (const auto& c : columns)
    if (c.size() != dim) throw Error(ErrorKind::DimensionMismatch, "columns have inconsistent dimensions");
  if (field.prime) {
    if (!is_prime(*field.prime)) throw Error(ErrorKind::NotPrime, std::to_string(*field.prime) + " is not prime");
    if (*field.prime >= (1LL << 31)) throw Error(ErrorKind::TooLarge, "prime must be below 2^31");
  }
  auto oracle = [columns, field](ElementSet s) {
    Columns chosen;
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (s >> i & 1) chosen.push_back(columns[i]);
    return vector_rank(chosen, field);
  };
  Matroid m(index_labels(columns.size()), oracle,
            "matrix(" + std::to_string(columns.size()) + " columns over " + field.name() + ")");
  m.realization_ = std::make_pair(columns, field);
  return m;
}

Matroid Matroid::uniform(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error(ErrorKind::InvalidArgument, "uniform matroid needs 0 <= k <= n");
  return Matroid(index_labels(static_cast<std::size_t>(n)),
                 [k](ElementSet s) { return std::min(std::popcount(s), k); },
                 "U(" + std::to_string(k) + "," + std::to_string(n) + ")");
}

Matroid Matroid::graphic(const std::vector<std::pair<long long, long long>>& edges) {
  std::map<long long, std::size_t> vertex_id;
  std::vector<std::pair<std::size_t, std::size_t>> local;
  for (auto [u, v] : edges) {
    auto a = vertex_id.emplace(u, vertex_id.size()).first->second;
    auto b = vertex_id.emplace(v, vertex_id.size()).first->second;
    local.emplace_back(a, b);
  }
  const std::size_t nv = vertex_id.size();
  auto oracle = [local, nv](ElementSet s) {
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int r = 0;
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (!(s >> i & 1)) continue;
      auto a = find(local[i].first);
      auto b = find(local[i].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  };
  return Matroid(index_labels(edges.size()), oracle, "graphic(" + std::to_string(edges.size()) + " edges)");
}

Check verify_matroid_axioms(const Matroid& m, std::size_t max_ground) {
  const std::size_t n = m.ground_size();
  if (n > max_ground)
    throw Error(ErrorKind::TooLarge, "axiom check limited to " + std::to_string(max_ground) + " elements");
  Check c{"matroid rank axioms", true, std::nullopt, ""};
  auto fail = [&](std::string why) {
    c.passed = false;
    c.detail = std::move(why);
    return c;
  };
  if (m.rank(0) != 0) return fail("rank of the empty set is not 0");
  const ElementSet count = ElementSet{1} << n;
  std::vector<int> rk(count);
  for (ElementSet s = 0; s < count; ++s) rk[s] = m.rank(s);
  for (ElementSet s = 0; s < count; ++s) {
    for (std::size_t e = 0; e < n; ++e) {
      ElementSet be = ElementSet{1} << e;
      if (s & be) continue;
      int inc = rk[s | be] - rk[s];
      if (inc != 0 && inc != 1) return fail("rank jumps by " + std::to_string(inc) + " adding " + m.labels()[e]);
      for (std::size_t f = e + 1; f < n; ++f) {
        ElementSet bf = ElementSet{1} << f;
        if (s & bf) continue;
        if (rk[s | be] + rk[s | bf] < rk[s | be | bf] + rk[s])
          return fail("submodularity fails at " + format_set(s, m.labels()) + " with " + m.labels()[e] + ", " +
                      m.labels()[f]);
      }
    }
  }
  return c;
}

std::string format_set(ElementSet s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!(s >> i & 1)) continue;
    if (!first) out += ",";
    out += labels[i];
    first = false;
  }
  return out + "}";
}

FlatLattice lattice_of_flats(const Matroid& m, std::size_t max_flats) {
  const ElementSet bottom = m.loops();
  std::map<ElementSet, int> rank_of;
  std::set<std::pair<ElementSet, ElementSet>> cover_set;
  std::vector<ElementSet> frontier{bottom};
  rank_of[bottom] = m.rank(bottom);
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet f : frontier) {
      for (std::size_t e = 0; e < m.ground_size(); ++e) {
        ElementSet bit = ElementSet{1} << e;
        if (f & bit) continue;
        ElementSet g = m.closure(f | bit);
        cover_set.emplace(f, g);
        if (rank_of.emplace(g, 0).second) {
          rank_of[g] = m.rank(g);
          if (rank_of.size() > max_flats)
            throw Error(ErrorKind::TooLarge, "more than " + std::to_string(max_flats) + " flats");
          next.push_back(g);
        }
      }
    }
    frontier = std::move(next);
  }

  // Deterministic order: by rank, then by sorted element list.
  std::vector<ElementSet> flats;
  for (const auto& [f, r] : rank_of) flats.push_back(f);
  auto elements_of = [&](ElementSet s) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < m.ground_size(); ++i)
      if (s >> i & 1) v.push_back(i);
    return v;
  };
  std::sort(flats.begin(), flats.end(), [&](ElementSet a, ElementSet b) {
    if (rank_of[a] != rank_of[b]) return rank_of[a] < rank_of[b];
    return elements_of(a) < elements_of(b);
  });
  std::map<ElementSet, std::size_t> position;
  for (std::size_t i = 0; i < flats.size(); ++i) position[flats[i]] = i;

  const ElementSet top = m.closure(m.ground());
  std::vector<std::string> labels;
  std::vector<int> grade;
  for (ElementSet f : flats) {
    labels.push_back(f == bottom ? "0" : f == top ? "1" : format_set(f, m.labels()));
    grade.push_back(rank_of[f]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (auto [a, b] : cover_set) relations.emplace_back(position[a], position[b]);

  FlatLattice out;
  out.poset = build_graded_poset(labels, relations, grade);
  out.doubled = scale_rank(*out.poset, 2);
  out.flats = std::move(flats);
  out.ground_labels = m.labels();
  out.has_loops = bottom != 0;
  return out;
}

IncidenceElement characteristic_kernel(const PosetPtr& lattice, const ComputeOptions& opts) {
  return convolve(mobius(lattice), bar(zeta(lattice)), opts);
}

namespace {

std::pair<ElementIndex, ElementIndex> bottom_top(const RankedPoset& P) {
  auto lo = P.minimum();
  auto hi = P.maximum();
  if (!lo || !hi) throw Error(ErrorKind::InternalAssertion, "lattice of flats lacks a bottom or top");
  return {*lo, *hi};
}

}  // namespace

IntPolynomial matroid_kl(const Matroid& m, const ComputeOptions& opts) {
  auto lattice = lattice_of_flats(m);
  auto f = right_kls(characteristic_kernel(lattice.poset, opts), opts);
  auto [lo, hi] = bottom_top(*lattice.poset);
  IntPolynomial p = f.at(lo, hi);
  if (p.coeff(0) != 1 || 2 * p.degree() >= std::max(1, lattice.poset->rank(lo, hi)))
    throw Error(ErrorKind::InternalAssertion, "matroid KL polynomial " + p.to_string() + " violates its bounds");
  return p;
}

IntPolynomial matroid_z(const Matroid& m, const ComputeOptions& opts) {
  auto lattice = lattice_of_flats(m);
  auto z = z_function(characteristic_kernel(lattice.poset, opts), opts);
  auto [lo, hi] = bottom_top(*lattice.poset);
  IntPolynomial p = z.at(lo, hi);
  if (p.reflect(lattice.poset->rank(lo, hi)) != p)
    throw Error(ErrorKind::InternalAssertion, "matroid Z polynomial is not palindromic");
  return p;
}

}  // namespace kls

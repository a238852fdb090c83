#include "kls/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include <boost/dynamic_bitset.hpp>

#include "kls/error.hpp"

namespace kls {

class PosetFactory {
 public:
  static PosetPtr create(std::vector<std::string> labels, std::vector<int> rank_matrix) {
    return PosetPtr(new RankedPoset(std::move(labels), std::move(rank_matrix)));
  }
};

RankedPoset::RankedPoset(std::vector<std::string> labels, std::vector<int> rank_matrix)
    : labels_(std::move(labels)), rank_(std::move(rank_matrix)) {
  const std::size_t n = labels_.size();
  up_.resize(n);
  down_.resize(n);
  pair_id_.assign(n * n, -1);
  for (ElementIndex x = 0; x < n; ++x) {
    index_.emplace(labels_[x], x);
    for (ElementIndex y = 0; y < n; ++y) {
      if (rank_[x * n + y] < 0) continue;
      pair_id_[x * n + y] = static_cast<std::ptrdiff_t>(pairs_.size());
      pairs_.emplace_back(x, y);
      up_[x].push_back(y);
      down_[y].push_back(x);
    }
  }
}

ElementIndex RankedPoset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "no element labelled '" + label + "'");
  return it->second;
}

int RankedPoset::rank(ElementIndex x, ElementIndex y) const {
  int r = rank_.at(x * size() + y);
  if (r < 0) throw Error(ErrorKind::NotComparable, label(x) + " is not below " + label(y));
  return r;
}

std::vector<ElementIndex> RankedPoset::interval(ElementIndex x, ElementIndex z) const {
  if (!leq(x, z)) throw Error(ErrorKind::NotComparable, label(x) + " is not below " + label(z));
  std::vector<ElementIndex> out;
  for (ElementIndex y : up_[x]) {
    if (y > z) break;
    if (leq(y, z)) out.push_back(y);
  }
  return out;
}

std::vector<std::string> RankedPoset::interval(const std::string& x, const std::string& z) const {
  std::vector<std::string> out;
  for (ElementIndex y : interval(index_of(x), index_of(z))) out.push_back(labels_[y]);
  return out;
}

PairIndex RankedPoset::pair_index(ElementIndex x, ElementIndex y) const {
  auto id = find_pair(x, y);
  if (!id) throw Error(ErrorKind::NotComparable, label(x) + " is not below " + label(y));
  return *id;
}

std::optional<PairIndex> RankedPoset::find_pair(ElementIndex x, ElementIndex y) const noexcept {
  if (x >= size() || y >= size()) return std::nullopt;
  auto id = pair_id_[x * size() + y];
  if (id < 0) return std::nullopt;
  return static_cast<PairIndex>(id);
}

std::vector<std::pair<ElementIndex, ElementIndex>> RankedPoset::covers() const {
  std::vector<std::pair<ElementIndex, ElementIndex>> out;
  for (auto [x, y] : pairs_) {
    if (x == y) continue;
    bool between = false;
    for (ElementIndex z : up_[x]) {
      if (z != x && z != y && less(z, y)) {
        between = true;
        break;
      }
    }
    if (!between) out.emplace_back(x, y);
  }
  return out;
}

std::optional<ElementIndex> RankedPoset::minimum() const noexcept {
  if (size() == 0 || up_[0].size() != size()) return std::nullopt;
  return ElementIndex{0};
}

std::optional<ElementIndex> RankedPoset::maximum() const noexcept {
  if (size() == 0 || down_[size() - 1].size() != size()) return std::nullopt;
  return size() - 1;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ordered {
  std::vector<std::size_t> order;  // new position -> input position
  std::vector<Bits> reach;         // in new positions, reflexive
};

// Stable Kahn sort (smallest input position first) plus reflexive-transitive closure.
Ordered sort_and_close(const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : relations) {
    if (a == b) throw Error(ErrorKind::CycleDetected, "relation " + labels[a] + " < " + labels[a]);
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  Ordered out;
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    out.order.push_back(i);
    for (std::size_t j : succ[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (out.order.size() != n) {
    for (std::size_t i = 0; i < n; ++i)
      if (indegree[i] != 0)
        throw Error(ErrorKind::CycleDetected, "relations contain a cycle through " + labels[i]);
  }
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[out.order[k]] = k;
  out.reach.assign(n, Bits(n));
  for (std::size_t k = n; k-- > 0;) {
    out.reach[k].set(k);
    for (std::size_t j : succ[out.order[k]]) out.reach[k] |= out.reach[position[j]];
  }
  return out;
}

void check_labels(const std::vector<std::string>& labels) {
  std::map<std::string, int> seen;
  for (const auto& l : labels) {
    if (l.find('<') != std::string::npos)
      throw Error(ErrorKind::InvalidArgument, "element label '" + l + "' contains '<'");
    if (++seen[l] > 1) throw Error(ErrorKind::InvalidArgument, "duplicate element label '" + l + "'");
  }
}

std::string triple(const std::vector<std::string>& labels, std::size_t x, std::size_t y, std::size_t z) {
  return labels[x] + " <= " + labels[y] + " <= " + labels[z];
}

void validate_ranks(const std::vector<std::string>& labels, const std::vector<int>& rank) {
  const std::size_t n = labels.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (rank[x * n + x] != 0)
      throw Error(ErrorKind::RankAxiomViolation, "r(" + labels[x] + "," + labels[x] + ") != 0");
    for (std::size_t y = x + 1; y < n; ++y) {
      int rxy = rank[x * n + y];
      if (rxy < 0) continue;
      if (rxy == 0)
        throw Error(ErrorKind::RankAxiomViolation,
                    "r(" + labels[x] + "," + labels[y] + ") must be positive");
      for (std::size_t z = y + 1; z < n; ++z) {
        int ryz = rank[y * n + z];
        if (ryz < 0) continue;
        if (rxy + ryz != rank[x * n + z])
          throw Error(ErrorKind::RankAxiomViolation, "additivity fails on " + triple(labels, x, y, z) +
                                                         ": " + std::to_string(rxy) + " + " +
                                                         std::to_string(ryz) +
                                                         " != " + std::to_string(rank[x * n + z]));
      }
    }
  }
}

}  // namespace

PosetPtr build_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations,
                     const RankPairs& rank_pairs) {
  check_labels(elements);
  std::map<std::string, std::size_t> input_pos;
  for (std::size_t i = 0; i < elements.size(); ++i) input_pos[elements[i]] = i;
  auto lookup = [&](const std::string& l) {
    auto it = input_pos.find(l);
    if (it == input_pos.end()) throw Error(ErrorKind::UnknownElement, "no element labelled '" + l + "'");
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (const auto& [a, b] : relations) rel.emplace_back(lookup(a), lookup(b));

  Ordered ord = sort_and_close(elements, rel);
  const std::size_t n = elements.size();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[ord.order[k]] = k;
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = elements[ord.order[k]];

  constexpr int unknown = -2;
  std::vector<int> given(n * n, unknown);
  for (const auto& [key, r] : rank_pairs) {
    std::size_t x = position[lookup(key.first)];
    std::size_t y = position[lookup(key.second)];
    if (!ord.reach[x].test(y))
      throw Error(ErrorKind::RankAxiomViolation,
                  "rank given for incomparable pair " + key.first + ", " + key.second);
    given[x * n + y] = r;
  }

  // Rows are filled from the top of the linear extension down, so r(y, .) is
  // complete for every y after x when row x is filled.
  std::vector<int> rank(n * n, -1);
  for (std::size_t x = n; x-- > 0;) {
    rank[x * n + x] = 0;
    for (std::size_t z = x + 1; z < n; ++z) {
      if (!ord.reach[x].test(z)) continue;
      int r = given[x * n + z];
      if (r == unknown) {
        for (std::size_t y = x + 1; y < z && r == unknown; ++y) {
          if (ord.reach[x].test(y) && ord.reach[y].test(z)) r = rank[x * n + y] + rank[y * n + z];
        }
      }
      if (r == unknown)
        throw Error(ErrorKind::MissingRank, "cannot infer r(" + labels[x] + "," + labels[z] + ")");
      rank[x * n + z] = r;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (given[x * n + x] != unknown && given[x * n + x] != 0)
      throw Error(ErrorKind::RankAxiomViolation, "r(" + labels[x] + "," + labels[x] + ") != 0");
  validate_ranks(labels, rank);
  return PosetFactory::create(std::move(labels), std::move(rank));
}

PosetPtr build_graded_poset(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                            const std::vector<int>& grade) {
  check_labels(elements);
  if (grade.size() != elements.size())
    throw Error(ErrorKind::InvalidArgument, "grade vector size does not match element count");
  for (auto [a, b] : relations)
    if (a >= elements.size() || b >= elements.size())
      throw Error(ErrorKind::UnknownElement, "relation refers to a missing element");
  Ordered ord = sort_and_close(elements, relations);
  const std::size_t n = elements.size();
  std::vector<std::string> labels(n);
  std::vector<int> rank(n * n, -1);
  for (std::size_t k = 0; k < n; ++k) labels[k] = elements[ord.order[k]];
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = ord.reach[x].find_first(); y != Bits::npos; y = ord.reach[x].find_next(y)) {
      int r = grade[ord.order[y]] - grade[ord.order[x]];
      if (x != y && r <= 0)
        throw Error(ErrorKind::RankAxiomViolation,
                    "r(" + labels[x] + "," + labels[y] + ") must be positive");
      rank[x * n + y] = r;
    }
  }
  return PosetFactory::create(std::move(labels), std::move(rank));
}

PosetPtr opposite(const RankedPoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::string> labels(poset.labels().rbegin(), poset.labels().rend());
  std::vector<int> rank(n * n, -1);
  for (auto [x, y] : poset.pairs()) rank[(n - 1 - y) * n + (n - 1 - x)] = poset.rank(x, y);
  return PosetFactory::create(std::move(labels), std::move(rank));
}

PosetPtr scale_rank(const RankedPoset& poset, int factor) {
  if (factor < 1) throw Error(ErrorKind::InvalidArgument, "rank scale factor must be >= 1");
  const std::size_t n = poset.size();
  std::vector<int> rank(n * n, -1);
  for (auto [x, y] : poset.pairs()) rank[x * n + y] = factor * poset.rank(x, y);
  return PosetFactory::create(poset.labels(), std::move(rank));
}

}  // namespace kls

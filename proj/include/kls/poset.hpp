#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kls {

using ElementIndex = std::size_t;
using PairIndex = std::size_t;

/// Ranks keyed by (lower label, upper label).
using RankPairs = std::map<std::pair<std::string, std::string>, int>;

/// A finite poset with a weak rank function stored on every comparable pair.
///
/// Elements are indexed 0..n-1 along a fixed linear extension, so x < y
/// implies index(x) < index(y). Comparable pairs (including x == x) carry a
/// dense pair index used by incidence-algebra tables. Instances are immutable.
class RankedPoset {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex x) const { return labels_.at(x); }
  ElementIndex index_of(const std::string& label) const;

  bool leq(ElementIndex x, ElementIndex y) const noexcept { return rank_[x * size() + y] >= 0; }
  bool less(ElementIndex x, ElementIndex y) const noexcept { return x != y && leq(x, y); }
  /// r_{xy}; throws NotComparable unless x <= y.
  int rank(ElementIndex x, ElementIndex y) const;

  /// Every y >= x, increasing index order (x first).
  const std::vector<ElementIndex>& up_set(ElementIndex x) const { return up_.at(x); }
  /// Every x <= y, increasing index order (y last).
  const std::vector<ElementIndex>& down_set(ElementIndex y) const { return down_.at(y); }

  /// [x, z] in linear-extension order; throws NotComparable unless x <= z.
  std::vector<ElementIndex> interval(ElementIndex x, ElementIndex z) const;
  std::vector<std::string> interval(const std::string& x, const std::string& z) const;

  std::size_t num_pairs() const noexcept { return pairs_.size(); }
  /// Comparable pairs, sorted by (x, y) index.
  const std::vector<std::pair<ElementIndex, ElementIndex>>& pairs() const noexcept { return pairs_; }
  PairIndex pair_index(ElementIndex x, ElementIndex y) const;
  std::optional<PairIndex> find_pair(ElementIndex x, ElementIndex y) const noexcept;

  /// Pairs x < y with nothing strictly between.
  std::vector<std::pair<ElementIndex, ElementIndex>> covers() const;

  std::optional<ElementIndex> minimum() const noexcept;
  std::optional<ElementIndex> maximum() const noexcept;

  /// Same labels in the same order, same relation and ranks.
  friend bool operator==(const RankedPoset& a, const RankedPoset& b) {
    return a.labels_ == b.labels_ && a.rank_ == b.rank_;
  }

 private:
  friend class PosetFactory;
  RankedPoset(std::vector<std::string> labels, std::vector<int> rank_matrix);

  std::vector<std::string> labels_;
  std::map<std::string, ElementIndex> index_;
  std::vector<int> rank_;  // n*n, -1 when x is not <= y
  std::vector<std::vector<ElementIndex>> up_;
  std::vector<std::vector<ElementIndex>> down_;
  std::vector<std::pair<ElementIndex, ElementIndex>> pairs_;
  std::vector<std::ptrdiff_t> pair_id_;  // n*n, -1 when incomparable
};

using PosetPtr = std::shared_ptr<const RankedPoset>;

/// Builds and validates a poset from strict relations a < b (covers or the full
/// order) and ranks on enough comparable pairs for additivity to determine the
/// rest. The linear extension is a stable topological sort by input order.
PosetPtr build_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations,
                     const RankPairs& rank_pairs);

/// Poset whose weak rank function comes from a grading: r_{xy} = grade[y] - grade[x].
/// Relations are (lower, upper) positions into `elements`.
PosetPtr build_graded_poset(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                            const std::vector<int>& grade);

/// Order reversed, r*_{yx} = r_{xy}, linear extension reversed.
PosetPtr opposite(const RankedPoset& poset);

/// Every rank multiplied by `factor` (>= 1).
PosetPtr scale_rank(const RankedPoset& poset, int factor);

}  // namespace kls

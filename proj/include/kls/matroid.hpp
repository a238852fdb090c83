#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kls/engine.hpp"
#include "kls/incidence.hpp"
#include "kls/poset.hpp"

namespace kls {

/// Subset of a matroid ground set (at most 64 elements), bit i = element i.
using ElementSet = std::uint64_t;

/// Coefficient field for a represented matroid: a prime p, or the rationals.
struct Field {
  std::optional<long long> prime;

  static Field rationals() { return {}; }
  static Field mod(long long p) { return {p}; }
  std::string name() const;
};

using Columns = std::vector<std::vector<long long>>;

class Matroid {
 public:
  /// Column i is ground element i. Over F_p entries are reduced mod p.
  static Matroid from_matrix(const Columns& columns, Field field);
  static Matroid uniform(int n, int k);
  /// Ground element i is edge i; vertices are arbitrary integers.
  static Matroid graphic(const std::vector<std::pair<long long, long long>>& edges);

  std::size_t ground_size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  ElementSet ground() const noexcept;

  int rank(ElementSet s) const { return oracle_(s); }
  int full_rank() const { return rank(ground()); }
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }
  ElementSet loops() const { return closure(0); }
  bool has_loops() const { return loops() != 0; }

  /// Present for matrix matroids.
  const std::optional<std::pair<Columns, Field>>& realization() const noexcept { return realization_; }
  const std::string& description() const noexcept { return description_; }

 private:
  Matroid(std::vector<std::string> labels, std::function<int(ElementSet)> oracle, std::string description);

  std::vector<std::string> labels_;
  std::function<int(ElementSet)> oracle_;
  std::optional<std::pair<Columns, Field>> realization_;
  std::string description_;
};

/// Exhaustive rank-axiom check over all subsets (normalized, unit increase,
/// local submodularity). TooLarge when the ground set exceeds `max_ground`.
Check verify_matroid_axioms(const Matroid& m, std::size_t max_ground = 14);

bool is_prime(long long p);

/// Rank of a set of vectors, exact over the rationals or mod p.
int vector_rank(const Columns& vectors, Field field);

struct FlatLattice {
  /// Flats ordered by inclusion, r_{FG} = rk G - rk F.
  PosetPtr poset;
  /// The same order with every rank doubled.
  PosetPtr doubled;
  /// Ground subset of each poset element.
  std::vector<ElementSet> flats;
  std::vector<std::string> ground_labels;
  bool has_loops = false;
};

/// Enumerates flats by closing covers upward from closure(empty set).
/// The bottom flat is labelled "0", the top "1", others by their element sets.
FlatLattice lattice_of_flats(const Matroid& m, std::size_t max_flats = 200000);

std::string format_set(ElementSet s, const std::vector<std::string>& labels);

/// chi = mu * bar(zeta).
IncidenceElement characteristic_kernel(const PosetPtr& lattice, const ComputeOptions& opts = {});

/// f_{01} of the right KLS-function of chi on the lattice of flats.
IntPolynomial matroid_kl(const Matroid& m, const ComputeOptions& opts = {});
/// Z_{01} of chi on the lattice of flats.
IntPolynomial matroid_z(const Matroid& m, const ComputeOptions& opts = {});

}  // namespace kls

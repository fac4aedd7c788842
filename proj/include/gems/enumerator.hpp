#pragma once

#include <vector>

#include "gems/embedding.hpp"
#include "gems/gem.hpp"

namespace gems {

/// Face lengths with multiplicities, q_0 < q_1 < ..., rank = sum of
/// multiplicities.
struct TypeMultiset {
  std::vector<std::pair<int, int>> entries;  // (q, k), q ascending

  int rank() const {
    int r = 0;
    for (auto [q, k] : entries) r += k;
    return r;
  }
  /// The nondecreasing length sequence (q repeated k times).
  std::vector<int> expanded() const;

  bool operator==(const TypeMultiset&) const = default;
};

struct CandidateType {
  TypeMultiset multiset;
  int p = 0;
  /// One SeType per distinct cyclic arrangement up to rotation/reflection,
  /// ordered by normalized cycle.
  std::vector<SeType> cyclic_expansions;
};

/// The complete duplicate-free list of candidate semi-equivelar types on the
/// surface of the given Euler characteristic chi < 0, ordered by rank, then
/// multiset, then p. Throws NonNegativeChi for chi >= 0.
std::vector<CandidateType> enumerate_types(long long chi,
                                           bool allow_two_gons = false);

/// True iff the Euler relation and all side conditions (p even, q | p,
/// p >= q) hold for the given sequence and chi.
bool check_type(const SeType& type, long long chi);

/// Raw-sequence form: also covers inputs a SeType cannot carry, such as an
/// odd p, which the side conditions reject.
bool check_type(const std::vector<int>& cycle, long long p, long long chi);

enum class Admissibility {
  Admissible,    // rank 3: compatible with a gem on this surface
  NotExcluded,   // higher rank on even chi: not ruled out by the
                 // orientability/genus obstructions
};

struct AdmissibleType {
  CandidateType type;
  Admissibility admissibility = Admissibility::Admissible;
};

/// enumerate_types filtered by the gem obstructions: odd chi forces a
/// non-orientable surface of odd genus, which only rank 3 survives; for even
/// chi the higher ranks are kept but flagged.
std::vector<AdmissibleType> gem_admissible_types(long long chi,
                                                 bool allow_two_gons = false);

/// All distinct cyclic arrangements of a length multiset up to
/// rotation/reflection, as normalized cycles in ascending order.
std::vector<std::vector<int>> cyclic_arrangements(const std::vector<int>& lengths);

}  // namespace gems

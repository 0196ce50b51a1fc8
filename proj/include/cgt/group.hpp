#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/perm.hpp"

namespace cgt {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct GroupOptions {
  /// Hard cap on the group order; construction aborts when the chain
  /// proves the order exceeds it.
  BigInt order_cap = BigInt(1000000000);
  /// Optional preferred base prefix (0-based points).
  std::vector<Point> base_hint;
};

/// A permutation group with a verified stabilizer chain.
///
/// Immutable after construction and safe to share across threads; all
/// queries are read-only.  The chain is built with the deterministic
/// Schreier-Sims algorithm, so identical inputs give identical chains.
class Group {
public:
  /// Builds a verified chain.  All generators must have degree `degree`.
  static GroupPtr make(Point degree, std::vector<Permutation> generators,
                       const GroupOptions& opt = {});

  Point degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  /// Base points of the chain (0-based), empty for the trivial group.
  const std::vector<Point>& base() const { return base_; }

  /// True iff x sifts to the identity through the chain.
  bool contains(const Permutation& x) const;

  /// Exactly uniform over the group: independent uniform transversal picks
  /// per base point, derived deterministically from the seed.
  Permutation uniform_element(std::uint64_t seed) const;

  /// All elements via transversal products; refuses when |G| > limit.
  std::vector<Permutation> elements(std::uint64_t limit = 2000000) const;

  /// Orbit lengths of the fundamental orbits, one per base point.
  std::vector<std::uint64_t> fundamental_orbit_lengths() const;

  /// Strong generators fixing base[0..prefix-1] pointwise; with prefix 0
  /// these generate the whole group.  Combine with a base hint to obtain
  /// pointwise stabilizers of chosen points.
  std::vector<Permutation> stabilizer_generators(std::size_t prefix) const;

  /// p-part of |G| as an exponent: largest e with p^e dividing |G|.
  unsigned order_p_valuation(std::uint64_t p) const;

  Permutation identity() const { return Permutation(degree_); }

private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;        // strong generators fixing all earlier base points
    std::vector<Point> orbit;             // discovery order, orbit[0] == base_point
    std::vector<std::int64_t> orbit_pos;  // point -> index+1, 0 = not in orbit
    std::vector<Permutation> transversal; // point -> u with base_point^u == point
  };

  Group() = default;

  void recompute_orbit(std::size_t level);
  // Returns (residue, level reached); residue is the identity iff fully sifted.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level) const;
  void extend_base(const Permutation& witness);
  void close_level(std::size_t level);

  Point degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Spec-level constructors and queries.
GroupPtr make_group(Point degree, std::vector<Permutation> generators,
                    const GroupOptions& opt = {});

inline bool contains(const Group& g, const Permutation& x) { return g.contains(x); }

inline Permutation uniform_element(const Group& g, std::uint64_t seed) {
  return g.uniform_element(seed);
}

inline std::uint64_t element_order(const Permutation& x) { return x.order(); }

} // namespace cgt

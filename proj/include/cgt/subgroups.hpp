#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/conjugacy.hpp"
#include "cgt/group.hpp"

namespace cgt {

enum class Tri { yes, no, unknown };

/// A subgroup with its own verified chain, tied to the parent it lives in.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
};

/// Verifies every generator lies in the parent.
Subgroup make_subgroup(const GroupPtr& parent, std::vector<Permutation> generators);

/// N_G(H) = {x : H^x = H}, computed from the conjugation orbit of H with
/// Schreier generators; |N| always satisfies |G| = |N| * #conjugates.
GroupPtr normalizer(const GroupPtr& g, const GroupPtr& h);

/// Subgroup of order equal to the full p-part of |G| (trivial when p
/// does not divide |G|).  Randomized ascent through normalizers with a
/// deterministic seed; the result is verified against |G|_p exactly.
GroupPtr sylow_subgroup(const GroupPtr& g, std::uint64_t p, std::uint64_t seed = 0);

/// O_p(G): intersection of the Sylow p-subgroup with its conjugates until
/// conjugation-stable; the result is a normal p-subgroup containing every
/// normal p-subgroup.
GroupPtr p_core(const GroupPtr& g, std::uint64_t p);

GroupPtr normal_closure(const GroupPtr& g, const std::vector<Permutation>& seeds);
GroupPtr derived_subgroup(const GroupPtr& g);
bool is_solvable(const GroupPtr& g);

struct SolvabilityHints {
  std::optional<bool> is_simple;
  std::optional<bool> is_solvable;
};

struct PSolvableOptions {
  BigInt exhaustive_cap = BigInt(1000000);
  std::uint64_t quotient_index_cap = 5000;
};

/// Tri-state p-solvability: derived-series test first, then descent
/// through O_{p'} and O_p quotients realized as coset actions; corpus
/// metadata may short-circuit.  Returns unknown rather than guessing.
Tri is_p_solvable(const GroupPtr& g, std::uint64_t p, const SolvabilityHints& hints = {},
                  const PSolvableOptions& opt = {});

enum class InventoryMode { order_p_only, all_p_subgroups };

struct PSubgroupClass {
  Subgroup rep;
  BigInt normalizer_order;
  BigInt conjugate_count; // |G : N|
};

struct PSubgroupInventory {
  std::uint64_t prime = 0;
  InventoryMode mode = InventoryMode::order_p_only;
  bool complete = false;
  std::vector<PSubgroupClass> subgroups; // one per conjugacy class
};

/// One representative <x> per conjugacy class of order-p subgroups,
/// fused through the power maps; normalizer orders are exact class
/// arithmetic (|N| = |C(x)| * #{t : x^t ~ x}).
PSubgroupInventory order_p_subgroups(const GroupPtr& g, const ClassList& cl, std::uint64_t p);

struct AllPSubgroupOptions {
  BigInt exhaustive_cap = BigInt(1000000);
  std::uint64_t sylow_cap = 1024; // 2^10
  std::uint64_t orbit_cap = 4000000;
  std::uint64_t subgroup_cap = 200000;
  std::uint64_t seed = 0;
};

/// One representative per conjugacy class of nontrivial p-subgroups:
/// ascending-chain enumeration inside one Sylow p-subgroup, then fusion
/// under G-conjugation orbits.  Refuses with a structured error when the
/// caps do not admit the group.
PSubgroupInventory all_p_subgroups(const GroupPtr& g, std::uint64_t p,
                                   const AllPSubgroupOptions& opt = {});

} // namespace cgt

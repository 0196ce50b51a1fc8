#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cgt/conjugacy.hpp"
#include "cgt/cyclotomic.hpp"

namespace cgt {

struct CharTableOptions {
  /// Groups above this order are refused.
  BigInt table_cap = BigInt(10000000);
};

/// Exact ordinary character table.
///
/// Computed by the class-algebra method: class matrices are split into
/// common eigenspaces over a prime field F_l with l = 1 (mod exponent),
/// degrees and values are lifted to cyclotomic integers, and the table
/// is only published after both orthogonality relations have been checked
/// in exact cyclotomic arithmetic.  The modular phase is a means; the
/// audit is the source of truth.
struct CharacterTable {
  GroupPtr group;
  ClassListPtr classes;
  std::uint64_t exponent = 1;       // lcm of element orders
  std::uint64_t working_prime = 0;  // the l used by the modular phase
  std::vector<BigInt> degrees;      // value at the identity class, per row
  std::vector<std::vector<Cyclotomic>> rows; // rows[character][class]

  std::size_t row_count() const { return rows.size(); }

  /// Bit-exact TSV: one comment line fixing z, a header of class labels
  /// (order.size), then one row per character with the degree first.
  std::string to_tsv() const;
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

/// Class-algebra structure constants for class i: entry [j][k] counts
/// pairs (x, y) in C_i x C_j with x*y equal to the fixed representative
/// of C_k.
std::vector<std::vector<long long>> class_matrix(const ClassList& cl, std::size_t i,
                                                 const FlatClassMap& fm);
std::vector<std::vector<long long>> class_matrix(const ClassList& cl, std::size_t i);

CharacterTablePtr character_table(const GroupPtr& g, const ClassListPtr& cl,
                                  const CharTableOptions& opt = {});

std::vector<BigInt> character_degrees(const CharacterTable& t);

} // namespace cgt

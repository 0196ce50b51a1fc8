#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/chartab.hpp"

namespace cgt {

/// Largest power of p dividing n (n >= 1).
BigInt p_part(const BigInt& n, std::uint64_t p);

struct DefectReport {
  std::uint64_t prime = 0;
  BigInt group_p_part;
  std::vector<std::size_t> defect_zero_rows; // indices into the table
  std::vector<BigInt> defect_zero_degrees;
  bool p_core_trivial = false;

  std::string to_json() const;
};

/// Rows whose degree has full p-part; also records whether O_p(G) = 1.
/// The full table is taken (not just degrees) so the report can name
/// witnessing rows.
DefectReport defect_zero_characters(const CharacterTable& t, std::uint64_t p);

/// A class of elements x of order q with p not dividing |C_G(x)|, if one
/// exists.  Standalone use reports only; the harness asserts consequences
/// of such a witness only inside contexts where the ambient hypotheses of
/// its source theorem hold.
std::optional<std::size_t> tsushima_witness(const GroupPtr& g, const ClassList& cl,
                                            std::uint64_t p, std::uint64_t q);

} // namespace cgt

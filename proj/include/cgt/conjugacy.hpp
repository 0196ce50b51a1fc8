#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/group.hpp"

namespace cgt {

struct ConjClass {
  Permutation representative; // lexicographically least element of the class
  BigInt size;
  std::uint64_t element_order = 1;
};

struct ConjugacyOptions {
  /// Groups up to this order are partitioned by exhaustive closure;
  /// larger ones use seeded representative search whose termination is
  /// certified by the exact class-size sum.
  std::uint64_t small_threshold = 100000;
  std::uint64_t seed = 0;
  /// Refuse groups larger than this outright.
  std::uint64_t size_guard = 10000000;
};

/// Element -> class index lookup backed by one flat sorted array of
/// packed image arrays; covers every element of the group.
class FlatClassMap {
public:
  FlatClassMap() = default;
  FlatClassMap(Point degree, std::vector<std::uint16_t> keys, std::vector<std::uint32_t> ids);

  /// Class id, or npos when the permutation is not in the group.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find(const Permutation& x) const;

  std::size_t size() const { return ids_.size(); }

private:
  Point degree_ = 0;
  std::vector<std::uint16_t> keys_; // size() * degree entries, record-sorted
  std::vector<std::uint32_t> ids_;
};

class ClassList;
using ClassListPtr = std::shared_ptr<const ClassList>;

/// Conjugacy classes of a group: deterministic order (element order,
/// then size, then representative image array), identity class first.
class ClassList {
public:
  GroupPtr group;
  std::vector<ConjClass> classes;
  std::vector<std::size_t> inverse_map;
  /// For each prime divisor r of |G|: class index of rep^r per class.
  std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> power_maps;

  std::size_t count() const { return classes.size(); }

  /// Index of the class containing x; errors when x is not in the group.
  std::size_t class_of(const Permutation& x) const;

  /// Centralizer order |G| / |class|; exact division.
  BigInt centralizer_order(std::size_t index) const;

  /// One row per class: index, representative cycles, size, element order.
  std::string to_tsv() const;

private:
  friend ClassListPtr conjugacy_classes(const GroupPtr& g, const ConjugacyOptions& opt);
  friend FlatClassMap build_flat_class_map(const ClassList& cl);

  // Small groups carry the exact element map; large ones carry a bounded
  // prefix of each class for identification walks.
  std::shared_ptr<const FlatClassMap> full_map_;
  std::unordered_map<std::string, std::uint32_t> hit_map_;
};

ClassListPtr conjugacy_classes(const GroupPtr& g, const ConjugacyOptions& opt = {});

inline std::size_t class_of(const ClassList& cl, const Permutation& x) { return cl.class_of(x); }

/// C_G(x) as a subgroup handle; order verified via |G| = |class| * |C|.
GroupPtr centralizer(const GroupPtr& g, const Permutation& x);

/// Exact element -> class map for the whole group (size-guarded by the
/// caller; costs |G| time and memory).
FlatClassMap build_flat_class_map(const ClassList& cl);

/// Packed byte key of an image array (2 bytes per point).
std::string perm_key(const Permutation& p);

} // namespace cgt

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/error.hpp"

namespace cgt {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as an image array.
///
/// Composition convention: points act on the right, so (x * y) means
/// "apply x first, then y" and p^(x*y) = (p^x)^y.  All higher layers
/// inherit this convention.  External I/O is 1-based; the internal
/// representation is 0-based.
class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(Point degree) : img_(degree) {
    for (Point i = 0; i < degree; ++i) img_[i] = i;
  }

  /// From a 0-based image array; rejects non-bijections.
  static Permutation from_images(std::vector<Point> images);

  /// From a 1-based image array as it appears in group JSON files.
  static Permutation from_one_based(const std::vector<std::uint64_t>& images);

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// this * other: apply this first, then other.
  Permutation operator*(const Permutation& other) const {
    if (degree() != other.degree()) fail(errc::degree_mismatch, "permutation degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[i] = other.img_[img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  /// g^-1 * x * g (conjugate of x by g under the right-action convention).
  Permutation conjugated_by(const Permutation& g) const {
    if (degree() != g.degree()) fail(errc::degree_mismatch, "permutation degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
    return r;
  }

  Permutation power(long long e) const;

  bool operator==(const Permutation& other) const { return img_ == other.img_; }
  bool operator!=(const Permutation& other) const { return img_ != other.img_; }
  bool operator<(const Permutation& other) const { return img_ < other.img_; }

  /// Least m >= 1 with x^m = id; the lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Sorted cycle lengths >= 2; equal multisets <=> same cycle type.
  std::vector<Point> cycle_type() const;

  /// Cycle notation on 1-based points, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  /// 1-based image list for JSON output.
  std::vector<std::uint64_t> to_one_based() const;

private:
  std::vector<Point> img_;
};

} // namespace cgt

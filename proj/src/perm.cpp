#include "cgt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgt {

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v]) fail(errc::not_bijective, "image array is not a bijection");
    seen[v] = true;
  }
  Permutation r;
  r.img_ = std::move(images);
  return r;
}

Permutation Permutation::from_one_based(const std::vector<std::uint64_t>& images) {
  std::vector<Point> img;
  img.reserve(images.size());
  for (std::uint64_t v : images) {
    if (v < 1 || v > images.size()) fail(errc::not_bijective, "1-based image out of range");
    img.push_back(static_cast<Point>(v - 1));
  }
  return from_images(std::move(img));
}

Permutation Permutation::power(long long e) const {
  Permutation base = *this;
  if (e < 0) {
    base = inverse();
    e = -e;
  }
  Permutation acc(degree());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::uint64_t m = 1;
  for (Point len : cycle_type()) m = std::lcm(m, static_cast<std::uint64_t>(len));
  return m;
}

std::vector<Point> Permutation::cycle_type() const {
  std::vector<Point> lens;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    Point len = 0, j = i;
    do {
      seen[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    if (len > 1) lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << '(';
    Point j = i;
    bool first = true;
    do {
      if (!first) os << ',';
      os << j + 1;
      seen[j] = true;
      j = img_[j];
      first = false;
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::vector<std::uint64_t> Permutation::to_one_based() const {
  std::vector<std::uint64_t> v;
  v.reserve(degree());
  for (Point i = 0; i < degree(); ++i) v.push_back(img_[i] + 1);
  return v;
}

} // namespace cgt

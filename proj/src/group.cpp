#include "cgt/group.hpp"

#include <algorithm>
#include <random>

#include "cgt/error.hpp"

namespace cgt {

namespace {

bool fixes_all(const Permutation& g, const std::vector<Point>& pts, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (g[pts[i]] != pts[i]) return false;
  return true;
}

Point least_moved_point(const Permutation& g) {
  for (Point i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  fail(errc::internal, "least_moved_point called on the identity");
}

} // namespace

GroupPtr Group::make(Point degree, std::vector<Permutation> generators, const GroupOptions& opt) {
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;

  for (const auto& x : generators) {
    if (x.degree() != degree) fail(errc::degree_mismatch, "generator degree mismatch");
    if (x.is_identity()) continue;
    if (std::find(g->gens_.begin(), g->gens_.end(), x) == g->gens_.end()) g->gens_.push_back(x);
  }

  for (Point b : opt.base_hint) {
    if (b >= degree) fail(errc::bad_input, "base hint point out of range");
    Level lv;
    lv.base_point = b;
    g->base_.push_back(b);
    g->levels_.push_back(std::move(lv));
  }

  for (const auto& x : g->gens_)
    if (fixes_all(x, g->base_, g->base_.size())) g->extend_base(x);

  // Level l holds the strong generators fixing base[0..l-1].
  for (const auto& x : g->gens_)
    for (std::size_t l = 0; l < g->levels_.size() && fixes_all(x, g->base_, l); ++l)
      g->levels_[l].gens.push_back(x);

  if (!g->levels_.empty())
    for (std::size_t l = g->levels_.size(); l-- > 0;) g->close_level(l);

  g->order_ = 1;
  for (const auto& lv : g->levels_) g->order_ *= static_cast<std::uint64_t>(lv.orbit.size());
  if (g->order_ > opt.order_cap)
    fail(errc::cap_exceeded, "group order " + g->order_.str() + " exceeds cap " + opt.order_cap.str());

  // Drop redundant levels so the trivial group ends up with an empty base.
  std::vector<Level> kept;
  std::vector<Point> kept_base;
  for (auto& lv : g->levels_) {
    if (lv.orbit.size() <= 1) continue;
    kept_base.push_back(lv.base_point);
    kept.push_back(std::move(lv));
  }
  g->levels_ = std::move(kept);
  g->base_ = std::move(kept_base);

  for (const auto& x : g->gens_)
    if (!g->contains(x)) fail(errc::internal, "chain verification failed: generator does not sift");

  return g;
}

void Group::recompute_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  lv.orbit_pos.assign(degree_, 0);
  lv.transversal.assign(degree_, Permutation());

  lv.orbit.push_back(lv.base_point);
  lv.orbit_pos[lv.base_point] = 1;
  lv.transversal[lv.base_point] = Permutation(degree_);

  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    Point p = lv.orbit[i];
    for (const auto& s : lv.gens) {
      Point q = s[p];
      if (!lv.orbit_pos[q]) {
        lv.orbit_pos[q] = static_cast<std::int64_t>(lv.orbit.size()) + 1;
        lv.transversal[q] = lv.transversal[p] * s;
        lv.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, std::size_t> Group::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point p = g[lv.base_point];
    if (p == lv.base_point) continue;
    if (!lv.orbit_pos[p]) return {std::move(g), l};
    g = g * lv.transversal[p].inverse();
  }
  return {std::move(g), levels_.size()};
}

void Group::extend_base(const Permutation& witness) {
  Level lv;
  lv.base_point = least_moved_point(witness);
  base_.push_back(lv.base_point);
  levels_.push_back(std::move(lv));
}

void Group::close_level(std::size_t level) {
  recompute_orbit(level);
  // levels_ may reallocate when the base grows, so re-index instead of
  // holding references across the sift-and-add step.
  for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
    for (std::size_t si = 0; si < levels_[level].gens.size(); ++si) {
      const Level& lv = levels_[level];
      Point p = lv.orbit[oi];
      Permutation sg = lv.transversal[p] * lv.gens[si];
      Point q = sg[lv.base_point];
      sg = sg * lv.transversal[q].inverse();
      if (sg.is_identity()) continue;
      auto [res, j] = sift(std::move(sg), level + 1);
      if (res.is_identity()) continue;
      if (j == levels_.size()) extend_base(res);
      for (std::size_t t = level + 1; t <= j; ++t) levels_[t].gens.push_back(res);
      for (std::size_t t = j + 1; t-- > level + 1;) close_level(t);
    }
  }
}

bool Group::contains(const Permutation& x) const {
  if (x.degree() != degree_) fail(errc::degree_mismatch, "membership query degree mismatch");
  auto [res, lvl] = sift(x, 0);
  (void)lvl;
  return res.is_identity();
}

Permutation Group::uniform_element(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& lv = levels_[l];
    std::uint64_t n = lv.orbit.size();
    std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= bound);
    g = g * lv.transversal[lv.orbit[r % n]];
  }
  return g;
}

std::vector<Permutation> Group::elements(std::uint64_t limit) const {
  if (order_ > limit) fail(errc::cap_exceeded, "element enumeration cap exceeded");
  std::vector<Permutation> cur{Permutation(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& lv = levels_[l];
    std::vector<Permutation> next;
    next.reserve(cur.size() * lv.orbit.size());
    for (const auto& e : cur)
      for (Point p : lv.orbit) next.push_back(e * lv.transversal[p]);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Permutation> Group::stabilizer_generators(std::size_t prefix) const {
  if (prefix >= levels_.size()) return {};
  return levels_[prefix].gens;
}

std::vector<std::uint64_t> Group::fundamental_orbit_lengths() const {
  std::vector<std::uint64_t> lens;
  for (const auto& lv : levels_) lens.push_back(lv.orbit.size());
  return lens;
}

unsigned Group::order_p_valuation(std::uint64_t p) const {
  unsigned v = 0;
  BigInt n = order_;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

GroupPtr make_group(Point degree, std::vector<Permutation> generators, const GroupOptions& opt) {
  return Group::make(degree, std::move(generators), opt);
}

} // namespace cgt

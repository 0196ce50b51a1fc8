#include "cgt/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

namespace {

using u64 = std::uint64_t;

std::vector<Permutation> sorted_elements(const Group& g, u64 limit = 2000000) {
  auto v = g.elements(limit);
  std::sort(v.begin(), v.end());
  return v;
}

std::string element_set_key(const std::vector<Permutation>& sorted_elems) {
  std::string key;
  key.reserve(sorted_elems.size() * sorted_elems[0].degree() * 2);
  for (const auto& p : sorted_elems) key += perm_key(p);
  return key;
}

std::vector<Permutation> conjugate_set(const std::vector<Permutation>& elems,
                                       const Permutation& t) {
  std::vector<Permutation> out;
  out.reserve(elems.size());
  for (const auto& x : elems) out.push_back(x.conjugated_by(t));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_p_power_order(const BigInt& n, u64 p) {
  BigInt m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

// incremental build: add generators one by one, skipping redundant ones,
// stopping early once `target` is reached (when target is nonzero)
GroupPtr grow_group(Point degree, const std::vector<Permutation>& seed,
                    const std::vector<Permutation>& candidates, const BigInt& target,
                    const BigInt& cap) {
  GroupOptions opt;
  opt.order_cap = cap;
  std::vector<Permutation> gens = seed;
  GroupPtr cur = make_group(degree, gens, opt);
  for (const auto& c : candidates) {
    if (target != 0 && cur->order() == target) break;
    if (c.is_identity() || cur->contains(c)) continue;
    gens.push_back(c);
    cur = make_group(degree, gens, opt);
  }
  return cur;
}

} // namespace

Subgroup make_subgroup(const GroupPtr& parent, std::vector<Permutation> generators) {
  for (const auto& x : generators)
    if (!parent->contains(x)) fail(errc::not_subgroup, "generator lies outside the parent group");
  GroupOptions opt;
  opt.order_cap = parent->order();
  Subgroup s;
  s.parent = parent;
  s.group = make_group(parent->degree(), std::move(generators), opt);
  return s;
}

GroupPtr normalizer(const GroupPtr& g, const GroupPtr& h) {
  for (const auto& x : h->generators())
    if (!g->contains(x)) fail(errc::not_subgroup, "normalizer: subgroup not contained in group");
  if (h->is_trivial() || h->order() == g->order()) return g;

  auto h_elems = sorted_elements(*h);

  // conjugation orbit of H among subgroups, transversal per node
  std::vector<Permutation> trav{Permutation(g->degree())};
  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(element_set_key(h_elems), 0);

  std::vector<std::pair<std::size_t, std::size_t>> edges; // (node, gen) -> child
  std::vector<std::size_t> edge_child;
  for (std::size_t i = 0; i < trav.size(); ++i) {
    for (std::size_t si = 0; si < g->generators().size(); ++si) {
      Permutation t = trav[i] * g->generators()[si];
      std::string key = element_set_key(conjugate_set(h_elems, t));
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(std::move(key), trav.size());
        edges.emplace_back(i, si);
        edge_child.push_back(trav.size());
        trav.push_back(std::move(t));
      } else {
        edges.emplace_back(i, si);
        edge_child.push_back(it->second);
      }
    }
  }

  BigInt orbit = trav.size();
  BigInt target = g->order() / orbit;
  if (target * orbit != g->order()) fail(errc::internal, "subgroup orbit size does not divide |G|");

  std::vector<Permutation> schreier;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [i, si] = edges[e];
    schreier.push_back(trav[i] * g->generators()[si] * trav[edge_child[e]].inverse());
  }
  GroupPtr n = grow_group(g->degree(), h->generators(), schreier, target, g->order());
  if (n->order() != target) fail(errc::internal, "normalizer order mismatch");
  return n;
}

GroupPtr sylow_subgroup(const GroupPtr& g, u64 p, u64 seed) {
  if (!is_prime(p)) fail(errc::not_prime, "sylow_subgroup: p must be prime");
  unsigned a = g->order_p_valuation(p);
  GroupOptions cap;
  cap.order_cap = g->order();
  if (a == 0) return make_group(g->degree(), {}, cap);

  auto p_element_from = [&](const Permutation& x) -> std::optional<Permutation> {
    u64 ord = x.order();
    if (ord % p) return std::nullopt;
    u64 rest = ord;
    while (rest % p == 0) rest /= p;
    return x.power(static_cast<long long>(rest));
  };

  // first p-element: deterministic scan for small groups, sampling otherwise
  std::optional<Permutation> start;
  if (g->order() <= 20000) {
    for (const auto& x : sorted_elements(*g)) {
      if (auto y = p_element_from(x)) {
        start = *y;
        break;
      }
    }
  } else {
    for (u64 ctr = 0; ctr < 100000 && !start; ++ctr)
      start = p_element_from(g->uniform_element(seed * 0x2545f4914f6cdd1dULL + ctr));
  }
  if (!start) fail(errc::internal, "no p-element found");
  GroupPtr sub = make_group(g->degree(), {*start}, cap);

  while (g->order_p_valuation(p) > sub->order_p_valuation(p) ||
         !is_p_power_order(sub->order(), p)) {
    if (!is_p_power_order(sub->order(), p)) fail(errc::internal, "sylow ascent left p-groups");
    GroupPtr n = normalizer(g, sub);
    // p divides |N : P| strictly while P is not yet Sylow
    bool grown = false;
    if (n->order() <= 20000) {
      for (const auto& z : sorted_elements(*n)) {
        auto w = p_element_from(z);
        if (!w || sub->contains(*w)) continue;
        auto gens = sub->generators();
        gens.push_back(*w);
        GroupPtr bigger = make_group(g->degree(), gens, cap);
        if (!is_p_power_order(bigger->order(), p)) continue;
        sub = bigger;
        grown = true;
        break;
      }
    } else {
      for (u64 ctr = 0; ctr < 200000 && !grown; ++ctr) {
        auto w = p_element_from(n->uniform_element(seed * 0x9e3779b97f4a7c15ULL + 1 + ctr));
        if (!w || sub->contains(*w)) continue;
        auto gens = sub->generators();
        gens.push_back(*w);
        GroupPtr bigger = make_group(g->degree(), gens, cap);
        if (!is_p_power_order(bigger->order(), p)) continue;
        sub = bigger;
        grown = true;
      }
    }
    if (!grown) fail(errc::internal, "sylow ascent stalled");
  }

  BigInt expected = 1;
  for (unsigned i = 0; i < a; ++i) expected *= p;
  if (sub->order() != expected) fail(errc::internal, "sylow order mismatch");
  return sub;
}

GroupPtr p_core(const GroupPtr& g, u64 p) {
  if (!is_prime(p)) fail(errc::not_prime, "p_core: p must be prime");
  GroupPtr d = sylow_subgroup(g, p);
  GroupOptions cap;
  cap.order_cap = g->order();

  bool stable = false;
  while (!stable) {
    stable = true;
    for (const auto& s : g->generators()) {
      bool inside = true;
      for (const auto& x : d->generators())
        if (!d->contains(x.conjugated_by(s))) {
          inside = false;
          break;
        }
      if (inside) continue;
      // intersect D with D^s
      std::vector<Permutation> conj_gens;
      for (const auto& x : d->generators()) conj_gens.push_back(x.conjugated_by(s));
      GroupPtr ds = make_group(g->degree(), conj_gens, cap);
      std::vector<Permutation> meet;
      for (const auto& x : d->elements())
        if (ds->contains(x)) meet.push_back(x);
      d = make_group(g->degree(), meet, cap);
      stable = false;
      break;
    }
  }

  if (!is_p_power_order(d->order(), p)) fail(errc::internal, "p-core is not a p-group");
  for (const auto& s : g->generators())
    for (const auto& x : d->generators())
      if (!d->contains(x.conjugated_by(s))) fail(errc::internal, "p-core not normal");
  return d;
}

GroupPtr normal_closure(const GroupPtr& g, const std::vector<Permutation>& seeds) {
  GroupOptions cap;
  cap.order_cap = g->order();
  std::vector<Permutation> gens;
  for (const auto& x : seeds)
    if (!x.is_identity()) gens.push_back(x);
  GroupPtr h = make_group(g->degree(), gens, cap);
  bool closed = false;
  while (!closed) {
    closed = true;
    const std::vector<Permutation> current = h->generators();
    for (const auto& x : current) {
      for (const auto& s : g->generators()) {
        Permutation c = x.conjugated_by(s);
        if (!h->contains(c)) {
          gens.push_back(std::move(c));
          closed = false;
        }
      }
    }
    if (!closed) h = make_group(g->degree(), gens, cap);
  }
  return h;
}

GroupPtr derived_subgroup(const GroupPtr& g) {
  std::vector<Permutation> comms;
  const auto& gs = g->generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
  return normal_closure(g, comms);
}

bool is_solvable(const GroupPtr& g) {
  GroupPtr cur = g;
  while (cur->order() > 1) {
    GroupPtr next = derived_subgroup(cur);
    if (next->order() == cur->order()) return false;
    cur = next;
  }
  return true;
}

namespace {

// the largest normal p'-subgroup, assembled from class-representative
// normal closures that are p'-groups
GroupPtr p_prime_core(const GroupPtr& g, u64 p) {
  auto cl = conjugacy_classes(g);
  std::vector<Permutation> gens;
  GroupOptions cap;
  cap.order_cap = g->order();
  GroupPtr acc = make_group(g->degree(), {}, cap);
  for (const auto& c : cl->classes) {
    if (c.element_order == 1 || c.element_order % p == 0) continue;
    if (acc->contains(c.representative)) continue;
    GroupPtr k = normal_closure(g, {c.representative});
    if (k->order() % p == 0) continue;
    for (const auto& x : k->generators()) gens.push_back(x);
    acc = normal_closure(g, gens);
    if (acc->order() % p == 0) fail(errc::internal, "p'-core picked up p elements");
  }
  return acc;
}

// faithful action of G/N on the right cosets of a normal subgroup N
GroupPtr quotient_by_normal(const GroupPtr& g, const GroupPtr& n, u64 index_cap) {
  BigInt index_big = g->order() / n->order();
  if (index_big > index_cap) fail(errc::cap_exceeded, "quotient index above cap");
  std::size_t index = static_cast<std::size_t>(index_big);

  std::vector<Permutation> reps{Permutation(g->degree())};
  auto coset_of = [&](const Permutation& x) -> std::size_t {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (n->contains(x * reps[i].inverse())) return i;
    return reps.size();
  };
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& s : g->generators()) {
      Permutation x = reps[i] * s;
      if (coset_of(x) == reps.size()) reps.push_back(std::move(x));
    }
  }
  if (reps.size() != index) fail(errc::internal, "coset enumeration mismatch");

  std::vector<Permutation> qgens;
  for (const auto& s : g->generators()) {
    std::vector<Point> img(index);
    for (std::size_t i = 0; i < index; ++i) {
      std::size_t j = coset_of(reps[i] * s);
      if (j == index) fail(errc::internal, "coset action escaped enumeration");
      img[i] = static_cast<Point>(j);
    }
    qgens.push_back(Permutation::from_images(img));
  }
  GroupOptions cap;
  cap.order_cap = g->order();
  GroupPtr q = make_group(static_cast<Point>(index), qgens, cap);
  if (q->order() * n->order() != g->order())
    fail(errc::internal, "quotient action is not faithful on G/N");
  return q;
}

} // namespace

Tri is_p_solvable(const GroupPtr& g, u64 p, const SolvabilityHints& hints,
                  const PSolvableOptions& opt) {
  if (!is_prime(p)) fail(errc::not_prime, "is_p_solvable: p must be prime");
  if (g->order() % p != 0) return Tri::yes;
  if (hints.is_solvable && *hints.is_solvable) return Tri::yes;
  if (hints.is_simple && *hints.is_simple) {
    // nonabelian simple with p | |G| is never p-solvable; prime order is
    BigInt o = g->order();
    bool prime_order = o <= std::numeric_limits<u64>::max() && is_prime(static_cast<u64>(o));
    return prime_order ? Tri::yes : Tri::no;
  }
  if (g->order() > opt.exhaustive_cap) return Tri::unknown;
  if (is_solvable(g)) return Tri::yes;

  GroupPtr cur = g;
  while (cur->order() > 1) {
    if (cur->order() % p != 0) return Tri::yes;
    GroupPtr op_prime = p_prime_core(cur, p);
    GroupPtr kernel = op_prime->order() > 1 ? op_prime : p_core(cur, p);
    if (kernel->order() == 1) return Tri::no;
    try {
      cur = quotient_by_normal(cur, kernel, opt.quotient_index_cap);
    } catch (const error& e) {
      if (e.code() == errc::cap_exceeded) return Tri::unknown;
      throw;
    }
    if (is_solvable(cur)) return Tri::yes;
  }
  return Tri::yes;
}

PSubgroupInventory order_p_subgroups(const GroupPtr& g, const ClassList& cl, u64 p) {
  if (!is_prime(p)) fail(errc::not_prime, "order_p_subgroups: p must be prime");
  PSubgroupInventory inv;
  inv.prime = p;
  inv.mode = InventoryMode::order_p_only;
  inv.complete = true;
  if (g->order() % p != 0) return inv;

  std::vector<std::size_t> order_p_classes;
  for (std::size_t i = 0; i < cl.count(); ++i)
    if (cl.classes[i].element_order == p) order_p_classes.push_back(i);

  // fuse element classes whose representatives generate conjugate cyclic
  // subgroups: <x> ~ <y> iff some power x^t lies in the class of y
  std::set<std::size_t> used;
  for (std::size_t ci : order_p_classes) {
    if (used.count(ci)) continue;
    const Permutation& x = cl.classes[ci].representative;
    std::set<std::size_t> power_classes;
    std::size_t self_powers = 0;
    Permutation cur = x;
    for (u64 t = 1; t < p; ++t) {
      std::size_t pc = cl.class_of(cur);
      power_classes.insert(pc);
      if (pc == ci) ++self_powers;
      cur = cur * x;
    }
    for (std::size_t pc : power_classes) used.insert(pc);

    PSubgroupClass entry;
    entry.rep = make_subgroup(g, {x});
    entry.normalizer_order = cl.centralizer_order(ci) * self_powers;
    entry.conjugate_count = g->order() / entry.normalizer_order;
    inv.subgroups.push_back(std::move(entry));
  }
  return inv;
}

namespace {

struct PGroupSubgroup {
  std::vector<Permutation> elems; // sorted
  GroupPtr handle;
};

// all subgroups of the p-group P, grouped by ascending order
std::vector<PGroupSubgroup> subgroups_of_p_group(const GroupPtr& p_grp, u64 p, u64 subgroup_cap) {
  auto p_elems = sorted_elements(*p_grp);
  GroupOptions cap;
  cap.order_cap = p_grp->order();

  std::map<std::string, PGroupSubgroup> layer;
  std::vector<PGroupSubgroup> all;

  for (const auto& x : p_elems) {
    if (x.order() != p) continue;
    GroupPtr h = make_group(p_grp->degree(), {x}, cap);
    auto elems = sorted_elements(*h);
    std::string key = element_set_key(elems);
    if (layer.count(key)) continue;
    layer.emplace(std::move(key), PGroupSubgroup{std::move(elems), std::move(h)});
  }

  while (!layer.empty()) {
    for (auto& [key, sub] : layer) all.push_back(sub);
    if (all.size() > subgroup_cap) fail(errc::cap_exceeded, "p-subgroup enumeration above cap");
    if (layer.begin()->second.handle->order() == p_grp->order()) break;

    std::map<std::string, PGroupSubgroup> next;
    for (const auto& [key, sub] : layer) {
      auto in_sub = [&](const Permutation& z) {
        return std::binary_search(sub.elems.begin(), sub.elems.end(), z);
      };
      for (const auto& y : p_elems) {
        if (in_sub(y)) continue;
        // y must normalize H and have p-th power inside H
        if (!in_sub(y.power(static_cast<long long>(p)))) continue;
        bool normalizes = true;
        for (const auto& hgen : sub.handle->generators())
          if (!in_sub(hgen.conjugated_by(y))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        auto gens = sub.handle->generators();
        gens.push_back(y);
        GroupPtr bigger = make_group(p_grp->degree(), gens, cap);
        if (bigger->order() != sub.handle->order() * p)
          fail(errc::internal, "index-p extension has wrong order");
        auto elems = sorted_elements(*bigger);
        std::string bkey = element_set_key(elems);
        if (next.count(bkey)) continue;
        next.emplace(std::move(bkey), PGroupSubgroup{std::move(elems), std::move(bigger)});
      }
    }
    layer = std::move(next);
  }
  return all;
}

} // namespace

PSubgroupInventory all_p_subgroups(const GroupPtr& g, u64 p, const AllPSubgroupOptions& opt) {
  if (!is_prime(p)) fail(errc::not_prime, "all_p_subgroups: p must be prime");
  PSubgroupInventory inv;
  inv.prime = p;
  inv.mode = InventoryMode::all_p_subgroups;
  if (g->order() % p != 0) {
    inv.complete = true;
    return inv;
  }

  GroupPtr syl = sylow_subgroup(g, p, opt.seed);
  if (g->order() > opt.exhaustive_cap && syl->order() > opt.sylow_cap)
    fail(errc::cap_exceeded, "all_p_subgroups: caps do not admit this group");

  auto subs = subgroups_of_p_group(syl, p, opt.subgroup_cap);

  // deterministic processing order: subgroup order, then element-set key
  std::vector<std::size_t> order_idx(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) order_idx[i] = i;
  std::vector<std::string> keys(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) keys[i] = element_set_key(subs[i].elems);
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (subs[a].handle->order() != subs[b].handle->order())
      return subs[a].handle->order() < subs[b].handle->order();
    return keys[a] < keys[b];
  });

  std::unordered_set<std::string> fused;
  for (std::size_t i : order_idx) {
    if (fused.count(keys[i])) continue;
    // conjugation orbit of this subgroup under G, walked through
    // transversal elements; members inside the Sylow are marked off
    std::unordered_set<std::string> seen{keys[i]};
    std::vector<Permutation> trav{Permutation(g->degree())};
    fused.insert(keys[i]);
    for (std::size_t qi = 0; qi < trav.size(); ++qi) {
      for (const auto& s : g->generators()) {
        Permutation t = trav[qi] * s;
        auto conj = conjugate_set(subs[i].elems, t);
        std::string key = element_set_key(conj);
        if (!seen.insert(key).second) continue;
        if (seen.size() > opt.orbit_cap) fail(errc::cap_exceeded, "subgroup orbit above cap");
        bool inside_sylow = true;
        for (const auto& x : conj)
          if (!syl->contains(x)) {
            inside_sylow = false;
            break;
          }
        if (inside_sylow) fused.insert(key);
        trav.push_back(std::move(t));
      }
    }
    BigInt orbit = trav.size();
    PSubgroupClass entry;
    entry.rep = make_subgroup(g, subs[i].handle->generators());
    entry.conjugate_count = orbit;
    entry.normalizer_order = g->order() / orbit;
    if (entry.normalizer_order * orbit != g->order())
      fail(errc::internal, "subgroup orbit size does not divide |G|");
    inv.subgroups.push_back(std::move(entry));
  }
  inv.complete = true;
  return inv;
}

} // namespace cgt

#include "cgt/conjugacy.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

std::string perm_key(const Permutation& p) {
  std::string s(static_cast<std::size_t>(p.degree()) * 2, '\0');
  for (Point i = 0; i < p.degree(); ++i) {
    s[2 * i] = static_cast<char>(p[i] & 0xff);
    s[2 * i + 1] = static_cast<char>((p[i] >> 8) & 0xff);
  }
  return s;
}

FlatClassMap::FlatClassMap(Point degree, std::vector<std::uint16_t> keys,
                           std::vector<std::uint32_t> ids)
    : degree_(degree), keys_(std::move(keys)), ids_(std::move(ids)) {
  if (keys_.size() != ids_.size() * degree_) fail(errc::internal, "flat map shape mismatch");
}

std::size_t FlatClassMap::find(const Permutation& x) const {
  if (x.degree() != degree_) return npos;
  std::size_t lo = 0, hi = ids_.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    const std::uint16_t* rec = keys_.data() + mid * degree_;
    int cmp = 0;
    for (Point i = 0; i < degree_; ++i) {
      std::uint16_t v = static_cast<std::uint16_t>(x[i]);
      if (rec[i] != v) {
        cmp = rec[i] < v ? -1 : 1;
        break;
      }
    }
    if (cmp == 0) return ids_[mid];
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return npos;
}

namespace {

struct OrbitScan {
  bool hit_known = false;
  std::uint32_t known_id = 0;
  Permutation min_elem;
  std::uint64_t count = 0;
  std::vector<std::string> kept;
};

// Conjugation-orbit closure from `start`.  When `hits` is given, stops as
// soon as the orbit touches a key in it (the orbit then equals that known
// class).  Otherwise enumerates the full class, tracking the least element.
OrbitScan conj_orbit_scan(const Group& g, const Permutation& start,
                          const std::unordered_map<std::string, std::uint32_t>* hits,
                          std::size_t keep_first) {
  OrbitScan out;
  out.min_elem = start;

  std::string start_key = perm_key(start);
  if (hits) {
    auto it = hits->find(start_key);
    if (it != hits->end()) {
      out.hit_known = true;
      out.known_id = it->second;
      return out;
    }
  }

  std::unordered_set<std::string> visited;
  std::vector<Permutation> queue;
  visited.insert(std::move(start_key));
  queue.push_back(start);
  if (keep_first) out.kept.push_back(perm_key(start));

  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = queue[i].conjugated_by(s);
      std::string key = perm_key(c);
      if (visited.count(key)) continue;
      if (hits) {
        auto it = hits->find(key);
        if (it != hits->end()) {
          out.hit_known = true;
          out.known_id = it->second;
          return out;
        }
      }
      if (c < out.min_elem) out.min_elem = c;
      if (out.kept.size() < keep_first) out.kept.push_back(key);
      visited.insert(std::move(key));
      queue.push_back(std::move(c));
    }
  }
  out.count = queue.size();
  return out;
}

struct RawClass {
  Permutation rep;
  std::uint64_t size = 0;
  std::uint64_t order = 1;
  std::vector<std::string> kept;
};

void small_path(const Group& g, std::vector<RawClass>& raw, std::vector<Permutation>& elems,
                std::vector<std::uint32_t>& ids, std::uint64_t limit) {
  elems = g.elements(limit);
  std::sort(elems.begin(), elems.end());
  ids.assign(elems.size(), 0);
  std::vector<char> classified(elems.size(), 0);

  auto position = [&](const Permutation& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || !(*it == p)) fail(errc::internal, "closure escaped the element list");
    return static_cast<std::size_t>(it - elems.begin());
  };

  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    if (classified[idx]) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(raw.size());
    std::vector<std::size_t> queue{idx};
    classified[idx] = 1;
    ids[idx] = cid;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& s : g.generators()) {
        std::size_t p = position(elems[queue[i]].conjugated_by(s));
        if (classified[p]) continue;
        classified[p] = 1;
        ids[p] = cid;
        queue.push_back(p);
      }
    }
    RawClass rc;
    rc.rep = elems[idx]; // ascending scan makes this the least class element
    rc.size = queue.size();
    rc.order = rc.rep.order();
    raw.push_back(std::move(rc));
  }
}

void large_path(const Group& g, std::vector<RawClass>& raw,
                std::unordered_map<std::string, std::uint32_t>& hits, std::uint64_t seed) {
  constexpr std::size_t kKeepPerClass = 1024;
  RawClass id_class;
  id_class.rep = Permutation(g.degree());
  id_class.size = 1;
  id_class.order = 1;
  raw.push_back(std::move(id_class));
  hits.emplace(perm_key(Permutation(g.degree())), 0);

  BigInt remaining = g.order() - 1;
  std::uint64_t ctr = 0;
  const std::uint64_t max_draws = 50000000;
  while (remaining > 0) {
    if (ctr >= max_draws) fail(errc::internal, "class search did not certify");
    Permutation x = g.uniform_element(seed * 0x9e3779b97f4a7c15ULL + ctr++);
    if (x.is_identity()) continue;
    OrbitScan scan = conj_orbit_scan(g, x, &hits, kKeepPerClass);
    if (scan.hit_known) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(raw.size());
    RawClass rc;
    rc.rep = scan.min_elem;
    rc.size = scan.count;
    rc.order = rc.rep.order();
    rc.kept = std::move(scan.kept);
    for (const auto& k : rc.kept) hits.emplace(k, cid);
    remaining -= rc.size;
    if (remaining < 0) fail(errc::internal, "class sizes overshot the group order");
    raw.push_back(std::move(rc));
  }
}

} // namespace

GroupPtr centralizer(const GroupPtr& g, const Permutation& x) {
  if (!g->contains(x)) fail(errc::not_in_group, "centralizer: element not in group");
  if (x.is_identity()) return g;

  std::vector<Permutation> orbit{x};
  std::vector<Permutation> trav{Permutation(g->degree())};
  std::unordered_map<std::string, std::size_t> pos;
  pos.emplace(perm_key(x), 0);

  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : g->generators()) {
      Permutation c = orbit[i].conjugated_by(s);
      std::string key = perm_key(c);
      if (pos.count(key)) continue;
      pos.emplace(std::move(key), orbit.size());
      trav.push_back(trav[i] * s);
      orbit.push_back(std::move(c));
    }
  }

  BigInt target = g->order() / orbit.size();
  if (target * orbit.size() != g->order())
    fail(errc::internal, "conjugacy orbit size does not divide the group order");

  GroupOptions opt;
  opt.order_cap = g->order();
  std::vector<Permutation> cgens;
  GroupPtr cur = make_group(g->degree(), {}, opt);
  for (std::size_t i = 0; i < orbit.size() && cur->order() != target; ++i) {
    for (const auto& s : g->generators()) {
      std::size_t j = pos.at(perm_key(orbit[i].conjugated_by(s)));
      Permutation sg = trav[i] * s * trav[j].inverse();
      if (sg.is_identity() || cur->contains(sg)) continue;
      cgens.push_back(std::move(sg));
      cur = make_group(g->degree(), cgens, opt);
      if (cur->order() == target) break;
    }
  }
  if (cur->order() != target) fail(errc::internal, "centralizer order mismatch");
  return cur;
}

ClassListPtr conjugacy_classes(const GroupPtr& g, const ConjugacyOptions& opt) {
  if (g->order() > opt.size_guard)
    fail(errc::cap_exceeded, "conjugacy size guard exceeded: |G| = " + g->order().str());

  auto cl = std::make_shared<ClassList>();
  cl->group = g;

  std::vector<RawClass> raw;
  std::vector<Permutation> elems;
  std::vector<std::uint32_t> elem_ids;
  std::unordered_map<std::string, std::uint32_t> hits;
  bool small = g->order() <= opt.small_threshold;
  if (small)
    small_path(*g, raw, elems, elem_ids, opt.small_threshold);
  else
    large_path(*g, raw, hits, opt.seed);

  // canonical class order: element order, then size, then least representative
  std::vector<std::uint32_t> by_key(raw.size());
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw[a].order != raw[b].order) return raw[a].order < raw[b].order;
    if (raw[a].size != raw[b].size) return raw[a].size < raw[b].size;
    return raw[a].rep < raw[b].rep;
  });
  std::vector<std::uint32_t> new_id(raw.size());
  for (std::uint32_t i = 0; i < by_key.size(); ++i) new_id[by_key[i]] = i;

  BigInt total = 0;
  for (std::uint32_t i : by_key) {
    ConjClass cc;
    cc.representative = raw[i].rep;
    cc.size = raw[i].size;
    cc.element_order = raw[i].order;
    total += cc.size;
    cl->classes.push_back(std::move(cc));
  }
  if (total != g->order()) fail(errc::internal, "class sizes do not sum to |G|");
  if (!cl->classes[0].representative.is_identity() || cl->classes[0].size != 1)
    fail(errc::internal, "identity class misplaced");

  if (small) {
    std::vector<std::uint16_t> keys;
    keys.reserve(elems.size() * g->degree());
    std::vector<std::uint32_t> ids;
    ids.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Point p = 0; p < g->degree(); ++p)
        keys.push_back(static_cast<std::uint16_t>(elems[i][p]));
      ids.push_back(new_id[elem_ids[i]]);
    }
    cl->full_map_ = std::make_shared<FlatClassMap>(g->degree(), std::move(keys), std::move(ids));
  } else {
    for (auto& [k, v] : hits) v = new_id[v];
    cl->hit_map_ = std::move(hits);
  }

  cl->inverse_map.resize(cl->classes.size());
  for (std::size_t i = 0; i < cl->classes.size(); ++i)
    cl->inverse_map[i] = cl->class_of(cl->classes[i].representative.inverse());

  for (std::uint64_t r : prime_divisors(g->order())) {
    std::vector<std::size_t> pm(cl->classes.size());
    for (std::size_t i = 0; i < cl->classes.size(); ++i)
      pm[i] = cl->class_of(cl->classes[i].representative.power(static_cast<long long>(r)));
    cl->power_maps.emplace_back(r, std::move(pm));
  }
  return cl;
}

std::size_t ClassList::class_of(const Permutation& x) const {
  if (!group->contains(x)) fail(errc::not_in_group, "class_of: element not in group");
  if (full_map_) {
    std::size_t id = full_map_->find(x);
    if (id == FlatClassMap::npos) fail(errc::internal, "element missing from class map");
    return id;
  }

  std::uint64_t ord = x.order();
  auto ct = x.cycle_type();
  std::size_t candidate = 0, n_cand = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].element_order == ord && classes[i].representative.cycle_type() == ct) {
      candidate = i;
      ++n_cand;
    }
  }
  if (n_cand == 1) return candidate;

  OrbitScan scan = conj_orbit_scan(*group, x, &hit_map_, 0);
  if (!scan.hit_known) fail(errc::internal, "identification walk found no known class");
  return scan.known_id;
}

BigInt ClassList::centralizer_order(std::size_t index) const {
  return group->order() / classes.at(index).size;
}

std::string ClassList::to_tsv() const {
  std::ostringstream os;
  os << "index\trep\tsize\torder\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    os << i << '\t' << classes[i].representative.cycles() << '\t' << classes[i].size.str() << '\t'
       << classes[i].element_order << '\n';
  return os.str();
}

FlatClassMap build_flat_class_map(const ClassList& cl) {
  if (cl.full_map_) return *cl.full_map_;

  const Group& g = *cl.group;
  std::size_t n = 0;
  for (const auto& c : cl.classes) n += static_cast<std::size_t>(c.size);
  Point deg = g.degree();

  std::vector<std::uint16_t> keys;
  keys.reserve(n * deg);
  std::vector<std::uint32_t> ids;
  ids.reserve(n);

  for (std::size_t ci = 0; ci < cl.classes.size(); ++ci) {
    std::unordered_set<std::string> visited;
    std::vector<Permutation> queue{cl.classes[ci].representative};
    visited.insert(perm_key(queue[0]));
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& s : g.generators()) {
        Permutation c = queue[i].conjugated_by(s);
        std::string key = perm_key(c);
        if (visited.insert(std::move(key)).second) queue.push_back(std::move(c));
      }
    }
    if (BigInt(queue.size()) != cl.classes[ci].size)
      fail(errc::internal, "class enumeration size mismatch");
    for (const auto& p : queue) {
      for (Point i = 0; i < deg; ++i) keys.push_back(static_cast<std::uint16_t>(p[i]));
      ids.push_back(static_cast<std::uint32_t>(ci));
    }
  }

  std::vector<std::uint32_t> idx(ids.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    const std::uint16_t* ka = keys.data() + static_cast<std::size_t>(a) * deg;
    const std::uint16_t* kb = keys.data() + static_cast<std::size_t>(b) * deg;
    return std::lexicographical_compare(ka, ka + deg, kb, kb + deg);
  });
  std::vector<std::uint16_t> skeys(keys.size());
  std::vector<std::uint32_t> sids(ids.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::memcpy(skeys.data() + i * deg, keys.data() + static_cast<std::size_t>(idx[i]) * deg,
                deg * sizeof(std::uint16_t));
    sids[i] = ids[idx[i]];
  }
  return FlatClassMap(deg, std::move(skeys), std::move(sids));
}

} // namespace cgt

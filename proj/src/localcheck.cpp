#include "cgt/localcheck.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "cgt/error.hpp"
#include "cgt/json_io.hpp"

namespace cgt {

std::string to_string(CheckMode m) {
  switch (m) {
    case CheckMode::exact: return "exact";
    case CheckMode::order_p_only: return "order-p-only";
    case CheckMode::certificate: return "certificate";
  }
  return "?";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

std::optional<CertificateTrace> local_certificate(const GroupPtr& g, const ClassList& cl,
                                                  std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) fail(errc::not_prime, "local_certificate: primes required");
  if (p == q) fail(errc::bad_input, "local_certificate: p and q must differ");

  CertificateTrace tr;
  for (std::size_t i = 0; i < cl.count(); ++i)
    if (cl.classes[i].element_order == q)
      tr.order_q_classes.emplace_back(i, cl.centralizer_order(i));

  if (tr.order_q_classes.empty()) {
    // no elements of order q: no q in any normalizer order at all
    tr.vacuous = true;
    tr.centralizers_p_free = true;
    tr.no_small_power_hits = true;
    return tr;
  }

  tr.p_valuation = g->order_p_valuation(p);
  tr.p_mult_order_mod_q = mod_order(p % q, q);
  tr.centralizers_p_free = true;
  for (const auto& [idx, cent] : tr.order_q_classes)
    if (cent % p == 0) tr.centralizers_p_free = false;
  tr.no_small_power_hits = tr.p_mult_order_mod_q > tr.p_valuation;

  if (tr.centralizers_p_free && tr.no_small_power_hits) return tr;
  return std::nullopt;
}

LocalVerdict local_hypothesis(const GroupPtr& g, std::uint64_t p, std::uint64_t q, CheckMode mode,
                              const ClassListPtr& cl_in, const AllPSubgroupOptions& opt) {
  if (!is_prime(p) || !is_prime(q)) fail(errc::not_prime, "local_hypothesis: primes required");
  if (p == q) fail(errc::bad_input, "local_hypothesis: p and q must differ");

  LocalVerdict v;
  v.p = p;
  v.q = q;
  v.mode = mode;

  auto check_inventory = [&](const PSubgroupInventory& inv) {
    v.holds = Tri::yes;
    for (const auto& entry : inv.subgroups) {
      if (entry.normalizer_order % q == 0) {
        v.holds = Tri::no;
        v.witness = LocalWitness{entry.rep, entry.normalizer_order};
        break;
      }
    }
  };

  switch (mode) {
    case CheckMode::exact: {
      AllPSubgroupOptions o = opt;
      check_inventory(all_p_subgroups(g, p, o));
      break;
    }
    case CheckMode::order_p_only: {
      ClassListPtr cl = cl_in ? cl_in : conjugacy_classes(g);
      check_inventory(order_p_subgroups(g, *cl, p));
      break;
    }
    case CheckMode::certificate: {
      ClassListPtr cl = cl_in ? cl_in : conjugacy_classes(g);
      v.certificate = local_certificate(g, *cl, p, q);
      v.holds = v.certificate ? Tri::yes : Tri::unknown;
      break;
    }
  }
  return v;
}

std::string LocalVerdict::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["q"] = q;
  j["mode"] = to_string(mode);
  if (holds == Tri::unknown)
    j["holds"] = nullptr;
  else
    j["holds"] = (holds == Tri::yes);
  if (witness) {
    nlohmann::json w;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& x : witness->subgroup.group->generators()) gens.push_back(x.cycles());
    w["generators"] = std::move(gens);
    w["subgroup_order"] = witness->subgroup.group->order().str();
    w["normalizer_order"] = witness->normalizer_order.str();
    j["witness"] = std::move(w);
  }
  if (certificate) {
    nlohmann::json c;
    c["vacuous"] = certificate->vacuous;
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& [idx, cent] : certificate->order_q_classes) {
      nlohmann::json e;
      e["class"] = idx;
      e["centralizer_order"] = cent.str();
      cls.push_back(std::move(e));
    }
    c["order_q_classes"] = std::move(cls);
    c["p_valuation"] = certificate->p_valuation;
    c["p_mult_order_mod_q"] = certificate->p_mult_order_mod_q;
    c["centralizers_p_free"] = certificate->centralizers_p_free;
    c["no_small_power_hits"] = certificate->no_small_power_hits;
    j["certificate"] = std::move(c);
  }
  return j.dump();
}

ActionSpec ActionSpec::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::bad_input, std::string("invalid action spec JSON: ") + e.what());
  }
  auto load_group = [&](const char* key) {
    if (!j.contains(key)) fail(errc::bad_input, std::string("action spec needs ") + key);
    GroupData d = parse_group_json(j.at(key).dump());
    return make_group(d.degree, d.generators);
  };
  ActionSpec spec;
  spec.p_group = load_group("p_group");
  spec.q_group = load_group("q_group");
  if (!j.contains("action")) fail(errc::bad_input, "action spec needs an action block");
  for (const auto& row : j.at("action")) {
    std::vector<Permutation> images;
    for (const auto& img : row)
      images.push_back(Permutation::from_one_based(img.get<std::vector<std::uint64_t>>()));
    spec.action.push_back(std::move(images));
  }
  if (spec.action.size() != spec.q_group->generators().size())
    fail(errc::bad_input, "action rows must match the q-group generator count");
  for (const auto& row : spec.action) {
    if (row.size() != spec.p_group->generators().size())
      fail(errc::bad_input, "action row length must match the p-group generator count");
    for (const auto& img : row)
      if (img.degree() != spec.p_group->degree())
        fail(errc::degree_mismatch, "action image degree mismatch");
  }
  return spec;
}

namespace {

// P's elements with index lookup plus a Cayley BFS spanning tree
struct ElementTable {
  std::vector<Permutation> elems; // sorted
  std::vector<std::size_t> bfs_order;
  std::vector<std::size_t> bfs_parent;
  std::vector<std::size_t> bfs_gen;

  std::size_t index_of(const Permutation& x) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || !(*it == x)) fail(errc::internal, "element escaped the table");
    return static_cast<std::size_t>(it - elems.begin());
  }
};

ElementTable build_table(const Group& g) {
  ElementTable t;
  t.elems = g.elements(1u << 20);
  std::sort(t.elems.begin(), t.elems.end());

  std::vector<char> visited(t.elems.size(), 0);
  std::size_t id_idx = t.index_of(Permutation(g.degree()));
  t.bfs_order.push_back(id_idx);
  t.bfs_parent.push_back(id_idx);
  t.bfs_gen.push_back(0);
  visited[id_idx] = 1;
  for (std::size_t i = 0; i < t.bfs_order.size(); ++i) {
    for (std::size_t si = 0; si < g.generators().size(); ++si) {
      std::size_t next = t.index_of(t.elems[t.bfs_order[i]] * g.generators()[si]);
      if (visited[next]) continue;
      visited[next] = 1;
      t.bfs_order.push_back(next);
      t.bfs_parent.push_back(t.bfs_order[i]);
      t.bfs_gen.push_back(si);
    }
  }
  if (t.bfs_order.size() != t.elems.size()) fail(errc::internal, "Cayley BFS did not cover P");
  return t;
}

using IndexPerm = std::vector<std::uint32_t>;

// extend generator images to a map on all of P, then verify it is an
// automorphism: well-defined across every Cayley edge and bijective
IndexPerm verified_automorphism(const ElementTable& tab, const Group& p_grp,
                                const std::vector<Permutation>& gen_images) {
  std::size_t n = tab.elems.size();
  std::vector<Permutation> image(n);
  std::vector<char> have(n, 0);
  std::size_t id_idx = tab.index_of(Permutation(p_grp.degree()));
  image[id_idx] = Permutation(p_grp.degree());
  have[id_idx] = 1;
  for (std::size_t i = 1; i < tab.bfs_order.size(); ++i) {
    std::size_t cur = tab.bfs_order[i];
    std::size_t par = tab.bfs_parent[i];
    if (!have[par]) fail(errc::internal, "BFS parent not resolved");
    image[cur] = image[par] * gen_images[tab.bfs_gen[i]];
    have[cur] = 1;
  }

  // multiplicativity on every Cayley edge implies it on all products
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t si = 0; si < p_grp.generators().size(); ++si) {
      std::size_t prod = tab.index_of(tab.elems[i] * p_grp.generators()[si]);
      if (!(image[prod] == image[i] * gen_images[si]))
        fail(errc::audit_failure, "action image is not multiplicative");
    }
  }

  IndexPerm sigma(n);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = tab.index_of(image[i]);
    if (seen[j]) fail(errc::audit_failure, "action image is not bijective");
    seen[j] = 1;
    sigma[i] = static_cast<std::uint32_t>(j);
  }
  return sigma;
}

} // namespace

std::optional<Permutation> lemma_same_search(const ActionSpec& spec) {
  const Group& P = *spec.p_group;
  const Group& Q = *spec.q_group;
  if (P.is_trivial()) fail(errc::bad_input, "lemma search needs a nontrivial p-group");
  if (Q.is_trivial()) fail(errc::bad_input, "lemma search needs a nontrivial q-group");
  auto p_primes = prime_divisors(P.order());
  auto q_primes = prime_divisors(Q.order());
  if (p_primes.size() != 1 || q_primes.size() != 1)
    fail(errc::bad_input, "lemma search needs prime-power group orders");
  std::uint64_t p = p_primes[0];

  ElementTable ptab = build_table(P);

  // verified automorphism per Q generator
  std::vector<IndexPerm> gen_sigma;
  for (const auto& row : spec.action) gen_sigma.push_back(verified_automorphism(ptab, P, row));

  // extend to all of Q along its own Cayley graph, checking consistency
  ElementTable qtab = build_table(Q);
  std::size_t qn = qtab.elems.size();
  std::vector<IndexPerm> sigma(qn);
  std::size_t q_id = qtab.index_of(Permutation(Q.degree()));
  sigma[q_id].resize(ptab.elems.size());
  for (std::size_t i = 0; i < ptab.elems.size(); ++i)
    sigma[q_id][i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 1; i < qtab.bfs_order.size(); ++i) {
    std::size_t cur = qtab.bfs_order[i];
    std::size_t par = qtab.bfs_parent[i];
    const IndexPerm& a = sigma[par];
    const IndexPerm& b = gen_sigma[qtab.bfs_gen[i]];
    IndexPerm comp(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) comp[t] = b[a[t]];
    sigma[cur] = std::move(comp);
  }
  for (std::size_t i = 0; i < qn; ++i) {
    for (std::size_t si = 0; si < Q.generators().size(); ++si) {
      std::size_t prod = qtab.index_of(qtab.elems[i] * Q.generators()[si]);
      for (std::size_t t = 0; t < ptab.elems.size(); ++t)
        if (sigma[prod][t] != gen_sigma[si][sigma[i][t]])
          fail(errc::audit_failure, "action does not respect the q-group multiplication");
    }
  }

  // exhaustive search over order-p elements of P, in element order
  for (std::size_t xi = 0; xi < ptab.elems.size(); ++xi) {
    const Permutation& x = ptab.elems[xi];
    if (x.order() != p) continue;
    std::vector<char> in_cyclic(ptab.elems.size(), 0);
    Permutation cur(P.degree());
    for (std::uint64_t t = 0; t < p; ++t) {
      in_cyclic[ptab.index_of(cur)] = 1;
      cur = cur * x;
    }
    for (std::size_t u = 0; u < qn; ++u) {
      if (u == q_id) continue;
      if (in_cyclic[sigma[u][xi]]) return x;
    }
  }
  return std::nullopt;
}

} // namespace cgt

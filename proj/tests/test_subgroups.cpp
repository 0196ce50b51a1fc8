#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cgt/subgroups.hpp"
#include "testutil.hpp"

using namespace cgt;
using namespace cgt::testutil;

namespace {

// brute-force filter oracle: N_G(H) by scanning every element of G
std::uint64_t brute_normalizer_order(const GroupPtr& g, const GroupPtr& h) {
  std::uint64_t n = 0;
  for (const auto& x : g->elements(10000)) {
    bool norm = true;
    for (const auto& hg : h->generators())
      if (!h->contains(hg.conjugated_by(x))) {
        norm = false;
        break;
      }
    if (norm) ++n;
  }
  return n;
}

// every subgroup of g, as sorted element lists (brute lattice walk)
std::vector<std::vector<Permutation>> brute_subgroups(const GroupPtr& g) {
  auto elems = g->elements(500);
  GroupOptions cap;
  cap.order_cap = g->order();
  std::map<std::string, std::vector<Permutation>> seen;
  auto key_of = [](const std::vector<Permutation>& sorted) {
    std::string k;
    for (const auto& p : sorted) k += perm_key(p);
    return k;
  };
  auto insert_subgroup = [&](const std::vector<Permutation>& gens) {
    auto h = make_group(g->degree(), gens, cap);
    auto es = h->elements(500);
    std::sort(es.begin(), es.end());
    return seen.emplace(key_of(es), es).second;
  };
  insert_subgroup({});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Permutation>> snapshot;
    for (const auto& [k, v] : seen) snapshot.push_back(v);
    for (const auto& sub : snapshot)
      for (const auto& x : elems) {
        std::vector<Permutation> gens = sub;
        gens.push_back(x);
        if (insert_subgroup(gens)) grew = true;
      }
  }
  std::vector<std::vector<Permutation>> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

// conjugacy classes of p-power-order subgroups via the brute lattice
std::map<std::uint64_t, std::size_t> brute_p_subgroup_classes(const GroupPtr& g,
                                                              std::uint64_t p) {
  auto subs = brute_subgroups(g);
  auto elems = g->elements(500);
  auto key_of = [](const std::vector<Permutation>& sorted) {
    std::string k;
    for (const auto& q : sorted) k += perm_key(q);
    return k;
  };
  std::set<std::string> done;
  std::map<std::uint64_t, std::size_t> classes_per_order;
  for (const auto& sub : subs) {
    std::uint64_t n = sub.size();
    if (n == 1) continue;
    bool ppower = true;
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    ppower = (m == 1);
    if (!ppower) continue;
    if (done.count(key_of(sub))) continue;
    for (const auto& x : elems) {
      std::vector<Permutation> conj;
      for (const auto& s : sub) conj.push_back(s.conjugated_by(x));
      std::sort(conj.begin(), conj.end());
      done.insert(key_of(conj));
    }
    classes_per_order[n]++;
  }
  return classes_per_order;
}

GroupPtr klein_in_a4() {
  return make_group(4, {product_of_cycles(4, {{1, 2}, {3, 4}}),
                        product_of_cycles(4, {{1, 3}, {2, 4}})});
}

} // namespace

TEST_CASE("make_subgroup validates containment and Lagrange") {
  auto s4 = make_sym(4);
  auto sub = make_subgroup(s4, {cycle(4, {1, 2, 3})});
  CHECK(sub.group->order() == 3);
  CHECK(s4->order() % sub.group->order() == 0);
  CHECK_THROWS_AS((void)make_subgroup(make_alt(4), {cycle(4, {1, 2})}), error);
}

TEST_CASE("normalizer examples") {
  auto a4 = make_alt(4);
  CHECK(normalizer(a4, klein_in_a4())->order() == 12);
  CHECK(normalizer(a4, make_group(4, {cycle(4, {1, 2, 3})}))->order() == 3);

  auto s3 = make_sym(3);
  CHECK(normalizer(s3, make_group(3, {cycle(3, {1, 2, 3})}))->order() == 6);

  CHECK_THROWS_AS((void)normalizer(a4, make_group(4, {cycle(4, {1, 2})})), error);
}

TEST_CASE("normalizer contains the subgroup and matches the brute filter") {
  auto s4 = make_sym(4);
  auto s5 = make_sym(5);
  std::vector<std::pair<GroupPtr, GroupPtr>> cases = {
      {s4, make_group(4, {cycle(4, {1, 2, 3, 4})})},
      {s4, make_group(4, {cycle(4, {1, 2})})},
      {s5, make_group(5, {cycle(5, {1, 2, 3, 4, 5})})},
      {s5, make_group(5, {cycle(5, {1, 2}), cycle(5, {3, 4})})},
      {make_alt(5), make_group(5, {cycle(5, {1, 2, 3})})},
      {make_dihedral(12), make_group(12, {cycle(12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})})}};
  for (const auto& [g, h] : cases) {
    auto n = normalizer(g, h);
    for (const auto& x : h->generators()) CHECK(n->contains(x));
    CHECK(n->order() % h->order() == 0);
    CHECK(n->order() == brute_normalizer_order(g, h));
  }
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(make_sym(4), 2)->order() == 8);
  CHECK(sylow_subgroup(make_sym(3), 5)->order() == 1);
  auto m11 = make_group(11, m11_generators());
  CHECK(sylow_subgroup(m11, 11)->order() == 11);
  CHECK(sylow_subgroup(m11, 2)->order() == 16);
  CHECK(sylow_subgroup(m11, 3)->order() == 9);
  CHECK_THROWS_AS((void)sylow_subgroup(make_sym(4), 4), error);

  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    auto g = make_sym(6);
    auto syl = sylow_subgroup(g, p);
    BigInt expected = 1;
    BigInt o = g->order();
    while (o % p == 0) {
      o /= p;
      expected *= p;
    }
    CHECK(syl->order() == expected);
  }
}

TEST_CASE("p-core examples") {
  CHECK(p_core(make_sym(3), 3)->order() == 3);
  auto o2s4 = p_core(make_sym(4), 2);
  CHECK(o2s4->order() == 4);
  // it is the Klein four-group of double transpositions
  CHECK(o2s4->contains(product_of_cycles(4, {{1, 2}, {3, 4}})));
  CHECK(p_core(make_group(11, m11_generators()), 2)->order() == 1);
  CHECK(p_core(make_alt(5), 5)->order() == 1);

  // O_p is normal and a p-group
  auto g = make_sym(4);
  auto d = p_core(g, 2);
  for (const auto& s : g->generators())
    for (const auto& x : d->generators()) CHECK(d->contains(x.conjugated_by(s)));
}

TEST_CASE("derived series and solvability") {
  auto s4 = make_sym(4);
  auto d1 = derived_subgroup(s4);
  CHECK(d1->order() == 12);
  auto d2 = derived_subgroup(d1);
  CHECK(d2->order() == 4);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_solvable(make_alt(5)));
  CHECK(is_solvable(make_dihedral(14)));
}

TEST_CASE("is_p_solvable examples") {
  CHECK(is_p_solvable(make_alt(4), 3) == Tri::yes);
  CHECK(is_p_solvable(make_alt(5), 5) == Tri::no);
  CHECK(is_p_solvable(make_sym(5), 5) == Tri::no);
  CHECK(is_p_solvable(make_sym(5), 7) == Tri::yes); // 7 does not divide 120
  // quotient descent: (A5 x C4) is not 2-solvable, the C4 core quotients away
  auto prod = make_direct_product(make_alt(5), make_cyclic(4));
  CHECK(is_p_solvable(prod, 2) == Tri::no);
  CHECK(is_p_solvable(prod, 3) == Tri::no);
  // metadata short-circuits
  SolvabilityHints simple_hint;
  simple_hint.is_simple = true;
  auto m11 = make_group(11, m11_generators());
  CHECK(is_p_solvable(m11, 11, simple_hint) == Tri::no);
  // above cap with no metadata
  PSolvableOptions tight;
  tight.exhaustive_cap = 10;
  CHECK(is_p_solvable(make_sym(5), 2, {}, tight) == Tri::unknown);
}

TEST_CASE("order-p subgroup inventories") {
  auto s3 = make_sym(3);
  auto inv3 = order_p_subgroups(s3, *conjugacy_classes(s3), 3);
  REQUIRE(inv3.subgroups.size() == 1);
  CHECK(inv3.subgroups[0].rep.group->order() == 3);
  CHECK(inv3.subgroups[0].normalizer_order == 6); // A3 is normal

  auto a4 = make_alt(4);
  auto inv2 = order_p_subgroups(a4, *conjugacy_classes(a4), 2);
  REQUIRE(inv2.subgroups.size() == 1);
  CHECK(inv2.subgroups[0].rep.group->order() == 2);
  CHECK(inv2.subgroups[0].normalizer_order == 4);

  // p not dividing |G|: empty but complete
  auto inv5 = order_p_subgroups(s3, *conjugacy_classes(s3), 5);
  CHECK(inv5.subgroups.empty());
  CHECK(inv5.complete);
}

TEST_CASE("order-p inventory normalizer arithmetic matches the brute filter") {
  for (const auto& g : {make_sym(4), make_sym(5), make_alt(5), make_dihedral(9)}) {
    auto cl = conjugacy_classes(g);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      if (static_cast<std::uint64_t>(g->order() % p) == 0) continue;
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      if (g->order() % p != 0) continue;
      auto inv = order_p_subgroups(g, *cl, p);
      for (const auto& entry : inv.subgroups)
        CHECK(entry.normalizer_order == brute_normalizer_order(g, entry.rep.group));
    }
  }
}

TEST_CASE("all p-subgroup classes of S4 at p=2") {
  auto inv = all_p_subgroups(make_sym(4), 2);
  CHECK(inv.complete);
  std::map<std::uint64_t, std::size_t> per_order;
  for (const auto& e : inv.subgroups)
    per_order[static_cast<std::uint64_t>(e.rep.group->order())]++;
  CHECK(per_order == std::map<std::uint64_t, std::size_t>{{2, 2}, {4, 3}, {8, 1}});
  CHECK(per_order == brute_p_subgroup_classes(make_sym(4), 2));
}

TEST_CASE("all p-subgroup classes of A4 at p=2: C2 and V4") {
  auto inv = all_p_subgroups(make_alt(4), 2);
  REQUIRE(inv.subgroups.size() == 2);
  CHECK(inv.subgroups[0].rep.group->order() == 2);
  CHECK(inv.subgroups[1].rep.group->order() == 4);
  CHECK(brute_p_subgroup_classes(make_alt(4), 2) ==
        std::map<std::uint64_t, std::size_t>{{2, 1}, {4, 1}});
}

TEST_CASE("all p-subgroup classes against the brute lattice on more groups") {
  for (const auto& g : {make_sym(3), make_dihedral(6), make_alt(4), make_dihedral(8)}) {
    for (std::uint64_t p : {2ull, 3ull}) {
      if (g->order() % p != 0) continue;
      auto inv = all_p_subgroups(g, p);
      std::map<std::uint64_t, std::size_t> per_order;
      for (const auto& e : inv.subgroups)
        per_order[static_cast<std::uint64_t>(e.rep.group->order())]++;
      CHECK(per_order == brute_p_subgroup_classes(g, p));
    }
  }
}

TEST_CASE("all_p_subgroups normalizer orders verified") {
  auto s4 = make_sym(4);
  auto inv = all_p_subgroups(s4, 2);
  for (const auto& e : inv.subgroups) {
    CHECK(e.normalizer_order == brute_normalizer_order(s4, e.rep.group));
    CHECK(e.normalizer_order * e.conjugate_count == s4->order());
  }
}

TEST_CASE("A4 sharpness: q=3 divides |N(V4)| but no order-2 normalizer") {
  auto a4 = make_alt(4);
  auto all = all_p_subgroups(a4, 2);
  bool some_v4_hit = false;
  for (const auto& e : all.subgroups)
    if (e.rep.group->order() == 4 && e.normalizer_order % 3 == 0) some_v4_hit = true;
  CHECK(some_v4_hit);

  auto reduced = order_p_subgroups(a4, *conjugacy_classes(a4), 2);
  for (const auto& e : reduced.subgroups) CHECK(e.normalizer_order % 3 != 0);
}

TEST_CASE("reduced/exhaustive equivalence when q divides p-1") {
  // q | p-1 makes "q divides some normalizer" agree between the order-p
  // inventory and the full inventory
  std::vector<GroupPtr> gs = {make_sym(4), make_sym(5), make_alt(5), make_dihedral(10),
                              make_dihedral(7), make_alt(6)};
  for (const auto& g : gs) {
    auto cl = conjugacy_classes(g);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      if (g->order() % p != 0) continue;
      for (std::uint64_t q : {2ull, 3ull}) {
        if (q == p || (p - 1) % q != 0 || g->order() % q != 0) continue;
        auto red = order_p_subgroups(g, *cl, p);
        auto full = all_p_subgroups(g, p);
        auto hit = [&](const PSubgroupInventory& inv) {
          for (const auto& e : inv.subgroups)
            if (e.normalizer_order % q == 0) return true;
          return false;
        };
        CHECK(hit(red) == hit(full));
      }
    }
  }
}

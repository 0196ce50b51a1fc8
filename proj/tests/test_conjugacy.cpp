#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cgt/conjugacy.hpp"
#include "testutil.hpp"

using namespace cgt;
using namespace cgt::testutil;

namespace {

// Independent oracle: partition the full element list by repeated
// conjugation closure with std::set bookkeeping.
std::multiset<std::uint64_t> brute_class_sizes(const GroupPtr& g) {
  auto all = brute_closure(g->generators(), g->degree());
  std::multiset<std::uint64_t> sizes;
  std::set<Permutation> done;
  for (const auto& x : all) {
    if (done.count(x)) continue;
    std::set<Permutation> cls{x};
    std::vector<Permutation> queue{x};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : g->generators()) {
        auto c = queue[i].conjugated_by(s);
        if (cls.insert(c).second) queue.push_back(c);
      }
    sizes.insert(cls.size());
    done.insert(cls.begin(), cls.end());
  }
  return sizes;
}

std::multiset<std::uint64_t> class_sizes(const ClassList& cl) {
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : cl.classes) sizes.insert(static_cast<std::uint64_t>(c.size));
  return sizes;
}

} // namespace

TEST_CASE("class sizes of S3 and S4") {
  auto s3 = conjugacy_classes(make_sym(3));
  CHECK(class_sizes(*s3) == std::multiset<std::uint64_t>{1, 3, 2});

  auto s4 = conjugacy_classes(make_sym(4));
  CHECK(s4->count() == 5);
  CHECK(class_sizes(*s4) == std::multiset<std::uint64_t>{1, 3, 6, 8, 6});
}

TEST_CASE("M11 has 10 classes, cross-checked against the brute partition") {
  auto m11 = make_group(11, m11_generators());
  auto cl = conjugacy_classes(m11);
  CHECK(cl->count() == 10);
  CHECK(class_sizes(*cl) == brute_class_sizes(m11));
}

TEST_CASE("class sizes sum to |G| and divide |G|") {
  for (const auto& g :
       {make_sym(5), make_alt(5), make_dihedral(9), make_cyclic(12), make_klein4()}) {
    auto cl = conjugacy_classes(g);
    BigInt total = 0;
    for (const auto& c : cl->classes) {
      total += c.size;
      CHECK(g->order() % c.size == 0);
    }
    CHECK(total == g->order());
  }
}

TEST_CASE("brute class partition agreement on assorted small groups") {
  for (const auto& g : {make_sym(4), make_alt(5), make_dihedral(8), make_dihedral(11)})
    CHECK(class_sizes(*conjugacy_classes(g)) == brute_class_sizes(g));
}

TEST_CASE("centralizer examples") {
  auto s4 = make_sym(4);
  CHECK(centralizer(s4, cycle(4, {1, 2}))->order() == 4);
  CHECK(centralizer(s4, s4->identity()) == s4);
  CHECK_THROWS_AS((void)centralizer(make_alt(4), cycle(4, {1, 2})), error);

  // |class| * |centralizer| = |G| across sampled elements
  auto a5 = make_alt(5);
  auto cl = conjugacy_classes(a5);
  for (std::size_t i = 0; i < cl->count(); ++i) {
    auto c = centralizer(a5, cl->classes[i].representative);
    CHECK(c->order() * cl->classes[i].size == a5->order());
    CHECK(c->order() == cl->centralizer_order(i));
  }
}

TEST_CASE("M11 order-11 centralizer has order 11") {
  auto m11 = make_group(11, m11_generators());
  Permutation x = m11->generators()[0];
  REQUIRE(x.order() == 11);
  CHECK(centralizer(m11, x)->order() == 11);
}

TEST_CASE("class_of basics and conjugation invariance") {
  auto s4 = make_sym(4);
  auto cl = conjugacy_classes(s4);
  CHECK(cl->class_of(s4->identity()) == 0);

  auto t = cycle(4, {1, 2});
  std::size_t tc = cl->class_of(t);
  CHECK(cl->classes[tc].element_order == 2);
  CHECK(cl->classes[tc].size == 6);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = s4->uniform_element(seed);
    auto x = s4->uniform_element(seed + 1000);
    CHECK(cl->class_of(x.conjugated_by(g)) == cl->class_of(x));
  }

  CHECK_THROWS_AS((void)cl->class_of(Permutation(5)), error);
}

TEST_CASE("inverse map is an involution fixing the identity class") {
  for (const auto& g : {make_sym(5), make_cyclic(7), make_dihedral(10)}) {
    auto cl = conjugacy_classes(g);
    CHECK(cl->inverse_map[0] == 0);
    for (std::size_t i = 0; i < cl->count(); ++i)
      CHECK(cl->inverse_map[cl->inverse_map[i]] == i);
  }
}

TEST_CASE("representative-search path agrees with the closure path") {
  ConjugacyOptions small_opt; // default: closure for |G| <= 1e5
  ConjugacyOptions forced;
  forced.small_threshold = 10; // force the representative search on S4/A5

  for (const auto& g : {make_sym(4), make_alt(5), make_dihedral(9)}) {
    auto a = conjugacy_classes(g, small_opt);
    auto b = conjugacy_classes(g, forced);
    REQUIRE(a->count() == b->count());
    for (std::size_t i = 0; i < a->count(); ++i) {
      CHECK(a->classes[i].representative == b->classes[i].representative);
      CHECK(a->classes[i].size == b->classes[i].size);
    }
    CHECK(a->inverse_map == b->inverse_map);
  }
}

TEST_CASE("representative-search path is seed independent") {
  ConjugacyOptions o1, o2;
  o1.small_threshold = o2.small_threshold = 10;
  o1.seed = 1;
  o2.seed = 42;
  auto a = conjugacy_classes(make_sym(5), o1);
  auto b = conjugacy_classes(make_sym(5), o2);
  REQUIRE(a->count() == b->count());
  for (std::size_t i = 0; i < a->count(); ++i)
    CHECK(a->classes[i].representative == b->classes[i].representative);
}

TEST_CASE("power maps land in correct classes") {
  auto g = make_sym(5);
  auto cl = conjugacy_classes(g);
  for (const auto& [r, pm] : cl->power_maps) {
    for (std::size_t i = 0; i < cl->count(); ++i) {
      auto powered = cl->classes[i].representative.power(static_cast<long long>(r));
      CHECK(cl->classes[pm[i]].element_order == powered.order());
      CHECK(cl->class_of(powered) == pm[i]);
    }
  }
}

TEST_CASE("class list TSV dump is stable") {
  auto cl = conjugacy_classes(make_sym(3));
  CHECK(cl->to_tsv() ==
        "index\trep\tsize\torder\n"
        "0\t()\t1\t1\n"
        "1\t(2,3)\t3\t2\n"
        "2\t(1,2,3)\t2\t3\n");
}

TEST_CASE("flat class map covers the group exactly") {
  auto g = make_alt(5);
  auto cl = conjugacy_classes(g);
  auto fm = build_flat_class_map(*cl);
  CHECK(BigInt(fm.size()) == g->order());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto x = g->uniform_element(seed);
    CHECK(fm.find(x) == cl->class_of(x));
  }
  CHECK(fm.find(cycle(5, {1, 2})) == FlatClassMap::npos);
}

TEST_CASE("size guard refuses oversized groups") {
  ConjugacyOptions opt;
  opt.size_guard = 50;
  CHECK_THROWS_AS((void)conjugacy_classes(make_sym(5), opt), error);
}

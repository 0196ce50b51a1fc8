#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cgt/chartab.hpp"
#include "testutil.hpp"

using namespace cgt;
using namespace cgt::testutil;

namespace {

GroupPtr make_q8() {
  // right multiplications on the eight unit quaternions
  auto i = product_of_cycles(8, {{1, 2, 4, 6}, {3, 8, 7, 5}});
  auto j = product_of_cycles(8, {{1, 3, 4, 7}, {2, 5, 6, 8}});
  return make_group(8, {i, j});
}

std::multiset<long long> degree_multiset(const CharacterTable& t) {
  std::multiset<long long> out;
  for (const auto& d : t.degrees) out.insert(static_cast<long long>(d));
  return out;
}

CharacterTablePtr table_of(const GroupPtr& g) {
  return character_table(g, conjugacy_classes(g));
}

} // namespace

TEST_CASE("class matrix of the identity class is the identity matrix") {
  auto cl = conjugacy_classes(make_sym(4));
  auto m = class_matrix(*cl, 0);
  for (std::size_t j = 0; j < cl->count(); ++j)
    for (std::size_t k = 0; k < cl->count(); ++k) CHECK(m[j][k] == (j == k ? 1 : 0));
}

TEST_CASE("S3 transposition class matrix against brute force") {
  auto s3 = make_sym(3);
  auto cl = conjugacy_classes(s3);
  // class 1 is the transposition class (order 2, size 3)
  REQUIRE(cl->classes[1].element_order == 2);
  auto m = class_matrix(*cl, 1);
  // identity column: pairs (x, y) of transpositions with x*y = id
  CHECK(m[1][0] == 3);

  // brute force over all 9 pairs for every column
  auto elems = s3->elements();
  for (std::size_t k = 0; k < cl->count(); ++k) {
    std::vector<long long> col(cl->count(), 0);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        if (cl->class_of(x) != 1) continue;
        if (!(x * y == cl->classes[k].representative)) continue;
        ++col[cl->class_of(y)];
      }
    for (std::size_t j = 0; j < cl->count(); ++j) CHECK(m[j][k] == col[j]);
  }
}

TEST_CASE("class matrix row-sum identity") {
  auto cl = conjugacy_classes(make_sym(4));
  for (std::size_t i = 0; i < cl->count(); ++i) {
    auto m = class_matrix(*cl, i);
    for (std::size_t j = 0; j < cl->count(); ++j) {
      BigInt sum = 0;
      for (std::size_t k = 0; k < cl->count(); ++k) sum += BigInt(m[j][k]) * cl->classes[k].size;
      CHECK(sum == cl->classes[i].size * cl->classes[j].size);
    }
  }
}

TEST_CASE("degrees of small groups") {
  CHECK(degree_multiset(*table_of(make_sym(3))) == std::multiset<long long>{1, 1, 2});
  CHECK(degree_multiset(*table_of(make_sym(4))) == std::multiset<long long>{1, 1, 2, 3, 3});
  CHECK(degree_multiset(*table_of(make_alt(4))) == std::multiset<long long>{1, 1, 1, 3});
  CHECK(degree_multiset(*table_of(make_alt(5))) == std::multiset<long long>{1, 3, 3, 4, 5});
  CHECK(degree_multiset(*table_of(make_dihedral(4))) == std::multiset<long long>{1, 1, 1, 1, 2});
  CHECK(degree_multiset(*table_of(make_q8())) == std::multiset<long long>{1, 1, 1, 1, 2});
  CHECK(degree_multiset(*table_of(make_group(3, {}))) == std::multiset<long long>{1});
}

TEST_CASE("M11 degrees") {
  auto t = table_of(make_group(11, m11_generators()));
  CHECK(degree_multiset(*t) ==
        std::multiset<long long>{1, 10, 10, 10, 11, 16, 16, 44, 45, 55});
}

TEST_CASE("hand-checked tables: S3 and Q8 values") {
  auto t = table_of(make_sym(3));
  // canonical order: sign character, trivial, then the reflection character
  REQUIRE(t->row_count() == 3);
  CHECK(t->rows[0][0] == Cyclotomic(1));
  CHECK(t->rows[0][1] == Cyclotomic(-1));
  CHECK(t->rows[0][2] == Cyclotomic(1));
  CHECK(t->rows[1][0] == Cyclotomic(1));
  CHECK(t->rows[1][1] == Cyclotomic(1));
  CHECK(t->rows[1][2] == Cyclotomic(1));
  CHECK(t->rows[2][0] == Cyclotomic(2));
  CHECK(t->rows[2][1] == Cyclotomic(0));
  CHECK(t->rows[2][2] == Cyclotomic(-1));

  auto q8 = table_of(make_q8());
  // the degree-2 character takes value -2 on the central involution
  const auto& cl = *q8->classes;
  std::size_t central = 0;
  for (std::size_t k = 0; k < cl.count(); ++k)
    if (cl.classes[k].element_order == 2 && cl.classes[k].size == 1) central = k;
  REQUIRE(central != 0);
  CHECK(q8->rows[4][central] == Cyclotomic(-2));
  CHECK(q8->degrees[4] == 2);
}

TEST_CASE("A4 linear characters carry cube roots of unity") {
  auto t = table_of(make_alt(4));
  const auto& cl = *t->classes;
  std::size_t c3 = 0;
  for (std::size_t k = 0; k < cl.count(); ++k)
    if (cl.classes[k].element_order == 3) {
      c3 = k;
      break;
    }
  REQUIRE(c3 != 0);
  std::multiset<std::string> vals;
  for (std::size_t i = 0; i < 4; ++i)
    if (t->degrees[i] == 1) vals.insert(t->rows[i][c3].str());
  CHECK(vals == std::multiset<std::string>{"1", "z", "-1-z"});
}

TEST_CASE("regular character decomposition for groups of order <= 24") {
  for (const auto& g : {make_sym(3), make_sym(4), make_alt(4), make_dihedral(4), make_q8(),
                        make_cyclic(6), make_klein4(), make_dihedral(6)}) {
    auto t = table_of(g);
    const auto& cl = *t->classes;
    // sum_i d_i chi_i(g) equals |G| at the identity and 0 elsewhere,
    // checked on every element through its class index
    for (const auto& x : g->elements()) {
      std::size_t k = cl.class_of(x);
      Cyclotomic sum(0);
      for (std::size_t i = 0; i < t->row_count(); ++i)
        sum = sum + Cyclotomic(static_cast<long long>(t->degrees[i])) * t->rows[i][k];
      if (k == 0)
        CHECK(sum == Cyclotomic(static_cast<long long>(g->order())));
      else
        CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("table determinism") {
  auto g = make_sym(5);
  auto t1 = table_of(g);
  auto t2 = table_of(g);
  CHECK(t1->to_tsv() == t2->to_tsv());
}

TEST_CASE("cap guard") {
  CharTableOptions opt;
  opt.table_cap = 100;
  auto g = make_sym(5);
  CHECK_THROWS_AS((void)character_table(g, conjugacy_classes(g), opt), error);
}

TEST_CASE("golden TSV for S4") {
  auto t = table_of(make_sym(4));
  CHECK(t->to_tsv() ==
        "# z = primitive 12-th root of unity\n"
        "degree\t1.1\t2.3\t2.6\t3.8\t4.6\n"
        "1\t1\t1\t-1\t1\t-1\n"
        "1\t1\t1\t1\t1\t1\n"
        "2\t2\t2\t0\t-1\t0\n"
        "3\t3\t-1\t-1\t0\t1\n"
        "3\t3\t-1\t1\t0\t-1\n");
}

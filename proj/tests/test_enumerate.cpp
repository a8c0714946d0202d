#include <doctest.h>

#include <algorithm>

#include "fincat/builders.hpp"
#include "fincat/enumerate.hpp"

using namespace fincat;

namespace {

FinCat cat_of(const char* name) {
  CatalogResult r = catalog(name);
  REQUIRE(r.entry);
  return std::move(r.entry->cat);
}

}  // namespace

TEST_CASE("endofunctor counts on the catalog") {
  struct Row {
    const char* name;
    size_t endos;
    size_t autoeqs;
    size_t autos;
  };
  const Row rows[] = {
      {"p4", 41, 6, 2},
      {"e3", 15, 6, 2},
      {"isopair", 4, 4, 2},
      {"discrete:2", 4, 2, 2},
      {"discrete:3", 27, 6, 6},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    FinCat c = cat_of(row.name);
    Budget b1(kDefaultBudget), b2(kDefaultBudget), b3(kDefaultBudget);
    CHECK(enumerate_functors(c, c, b1).size() == row.endos);
    CHECK(enumerate_autoequivalences(c, b2).size() == row.autoeqs);
    CHECK(enumerate_automorphisms(c, b3).size() == row.autos);
  }
}

TEST_CASE("enumeration is duplicate-free and canonically ordered") {
  FinCat c = cat_of("e3");
  Budget b(kDefaultBudget);
  std::vector<FinFunctor> endos = enumerate_functors(c, c, b);
  CHECK(std::is_sorted(endos.begin(), endos.end(), functor_less));
  for (size_t i = 1; i < endos.size(); ++i)
    CHECK_FALSE(endos[i - 1] == endos[i]);
}

TEST_CASE("the nontrivial automorphism of e3 exchanges the isomorphic pair") {
  FinCat c = cat_of("e3");
  Budget b(kDefaultBudget);
  std::vector<FinFunctor> autos = enumerate_automorphisms(c, b);
  REQUIRE(autos.size() == 2);
  bool found = false;
  for (const FinFunctor& f : autos) {
    if (f == identity_functor(c)) continue;
    CHECK(f.obj(c.find_object("e")) == c.find_object("a"));
    CHECK(f.obj(c.find_object("a")) == c.find_object("e"));
    CHECK(f.obj(c.find_object("f")) == c.find_object("f"));
    found = true;
  }
  CHECK(found);
}

TEST_CASE("automorphisms are a subset of autoequivalences") {
  for (const char* name : {"p4", "e3", "isopair"}) {
    FinCat c = cat_of(name);
    Budget b1(kDefaultBudget), b2(kDefaultBudget);
    std::vector<FinFunctor> eqs = enumerate_autoequivalences(c, b1);
    std::vector<FinFunctor> autos = enumerate_automorphisms(c, b2);
    for (const FinFunctor& a : autos)
      CHECK(std::binary_search(eqs.begin(), eqs.end(), a, functor_less));
  }
}

TEST_CASE("cross-category functor enumeration") {
  FinCat iso = cat_of("isopair");
  FinCat one = cat_of("discrete:1");
  Budget b1(kDefaultBudget), b2(kDefaultBudget);
  CHECK(enumerate_functors(iso, one, b1).size() == 1);
  CHECK(enumerate_functors(one, iso, b2).size() == 2);
}

TEST_CASE("budget overrun throws and saturates") {
  FinCat c = cat_of("p4");
  Budget tiny(3);
  CHECK_THROWS_AS(enumerate_functors(c, c, tiny), BudgetExceeded);
  CHECK(tiny.used() == 4);
  CHECK(tiny.limit() == 3);
}

TEST_CASE("worker counts do not change results or node totals") {
  FinCat c = cat_of("p4");
  Budget b1(kDefaultBudget), b2(kDefaultBudget);
  std::vector<FinFunctor> w1 = enumerate_functors(c, c, b1, {1});
  std::vector<FinFunctor> w2 = enumerate_functors(c, c, b2, {4});
  CHECK(w1 == w2);
  CHECK(b1.used() == b2.used());
}

TEST_CASE("natural transformations between parallel functors") {
  FinCat c = cat_of("isopair");
  FinFunctor id = identity_functor(c);
  Budget b(kDefaultBudget);
  std::vector<NatComponents> self = enumerate_nat_trans(id, id, b);
  CHECK(self.size() == 1);  // hom(x,x) = {id}

  FinFunctor sw{&c, &c, {1, 0},
                {c.identity_of(1), c.identity_of(0), c.find_morphism("y->x"),
                 c.find_morphism("x->y")}};
  std::vector<NatComponents> to_swap = enumerate_nat_trans(id, sw, b);
  CHECK(to_swap.size() == 1);

  std::optional<NatComponents> iso = find_natural_iso(id, sw, b);
  REQUIRE(iso);
  CHECK((*iso)[0] == c.find_morphism("x->y"));
  CHECK(are_naturally_isomorphic(id, sw, b));
  CHECK(are_naturally_isomorphic(sw, id, b));
}

TEST_CASE("non-isomorphic functors are detected") {
  FinCat c = cat_of("discrete:2");
  FinFunctor id = identity_functor(c);
  FinFunctor swap{&c, &c, {1, 0}, {1, 0}};
  Budget b(kDefaultBudget);
  CHECK_FALSE(are_naturally_isomorphic(id, swap, b));
  CHECK(find_natural_iso(id, swap, b) == std::nullopt);
}

#include <doctest.h>

#include <algorithm>

#include "fincat/builders.hpp"
#include "fincat/preorders.hpp"

using namespace fincat;

TEST_CASE("p4 catalog entry") {
  CatalogResult r = catalog("p4");
  REQUIRE(r.entry);
  const FinCat& c = r.entry->cat;
  CHECK(c.object_count() == 4);
  CHECK(c.morphism_count() == 9);
  CHECK(c.find_morphism("a->d") >= 0);  // forced by closure
  CHECK(c.find_morphism("b->a") == -1);

  const IsoPartition& p = c.iso_classes();
  REQUIRE(p.classes.size() == 3);
  CHECK(p.classes[0] == std::vector<int>{c.find_object("a")});
  CHECK(p.classes[1] == std::vector<int>{c.find_object("b")});
  CHECK(p.classes[2] ==
        std::vector<int>{c.find_object("c"), c.find_object("d")});
  CHECK_FALSE(r.entry->concrete);
}

TEST_CASE("e3 catalog entry") {
  CatalogResult r = catalog("e3");
  REQUIRE(r.entry);
  const FinCat& c = r.entry->cat;
  CHECK(c.object_count() == 3);
  CHECK(c.morphism_count() == 5);
  CHECK(c.inverse_of(c.find_morphism("e->a")) == c.find_morphism("a->e"));
  CHECK(c.class_size_of(c.find_object("e")) == 2);
  CHECK(c.class_size_of(c.find_object("f")) == 1);
  CHECK(c.hom(c.find_object("f"), c.find_object("a")).empty());
}

TEST_CASE("isopair and discrete catalog entries") {
  CatalogResult iso = catalog("isopair");
  REQUIRE(iso.entry);
  CHECK(iso.entry->cat.morphism_count() == 4);
  CHECK(iso.entry->cat.class_size_of(0) == 2);

  CatalogResult d3 = catalog("discrete:3");
  REQUIRE(d3.entry);
  CHECK(d3.entry->cat.object_count() == 3);
  CHECK(d3.entry->cat.morphism_count() == 3);

  CatalogResult d0 = catalog("discrete:0");
  REQUIRE(d0.entry);
  CHECK(d0.entry->cat.object_count() == 0);

  CHECK_FALSE(catalog("discrete:-1").entry);
  CHECK_FALSE(catalog("discrete:x").entry);
}

TEST_CASE("finset catalog entry carries underlying data") {
  CatalogResult r = catalog("finset:1,2,2");
  REQUIRE(r.entry);
  const FinCat& c = r.entry->cat;
  CHECK(c.object_count() == 3);
  CHECK(c.morphism_count() == 23);  // 3 identities + 20 other maps
  REQUIRE(r.entry->concrete);
  const ConcreteData& k = *r.entry->concrete;
  CHECK(k.labels[c.find_object("s1")].size() == 1);
  CHECK(k.labels[c.find_object("s2")].size() == 2);
  CHECK(k.labels[c.find_object("s3")].size() == 2);
  CHECK(static_cast<int>(k.mor_fn.size()) == c.morphism_count());

  CHECK(catalog("finset:[1,2,2]").entry);  // brackets allowed
  CHECK_FALSE(catalog("finset:0").entry);
  CHECK_FALSE(catalog("finset:").entry);
}

TEST_CASE("finset morphism cap") {
  CatalogResult r = catalog("finset:4,4");  // 4 * 256 maps > 500
  CHECK_FALSE(r.entry);
  CHECK(r.cap_exceeded);
  CHECK(catalog("finset:4,4", 2000).entry);
}

TEST_CASE("unknown catalog name") {
  CatalogResult r = catalog("nope");
  CHECK_FALSE(r.entry);
  CHECK_FALSE(r.error.empty());
  CHECK_FALSE(r.cap_exceeded);
}

TEST_CASE("from_preorder closes when asked and checks when not") {
  PreorderResult closed =
      from_preorder({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}, true);
  REQUIRE(closed.ok());
  CHECK(closed.category->find_morphism("x->z") >= 0);

  PreorderResult open =
      from_preorder({"x", "y", "z"},
                    {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "y"}, {"y", "z"}},
                    false);
  CHECK_FALSE(open.ok());  // missing (x, z)

  PreorderResult no_loop = from_preorder({"x", "y"}, {{"x", "y"}}, false);
  CHECK_FALSE(no_loop.ok());

  PreorderResult dup = from_preorder({"x", "x"}, {}, true);
  CHECK_FALSE(dup.ok());

  PreorderResult dangling = from_preorder({"x"}, {{"x", "nope"}}, true);
  CHECK_FALSE(dangling.ok());
}

TEST_CASE("all labeled preorders on three elements") {
  std::vector<FinCat> ps = all_preorders_on_3();
  CHECK(ps.size() == 29);
  for (const FinCat& c : ps) {
    CHECK(c.object_count() == 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(c.hom(a, b).size() <= 1);
  }
  // the discrete one and the codiscrete one are both present
  bool has_discrete = false, has_codiscrete = false;
  for (const FinCat& c : ps) {
    if (c.morphism_count() == 3) has_discrete = true;
    if (c.morphism_count() == 9) has_codiscrete = true;
  }
  CHECK(has_discrete);
  CHECK(has_codiscrete);
}

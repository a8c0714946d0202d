#include <doctest.h>

#include <stdexcept>

#include "fincat/builders.hpp"
#include "fincat/skeleton.hpp"

using namespace fincat;

TEST_CASE("p4 skeleton picks least members and first isomorphisms") {
  CatalogResult r = catalog("p4");
  const FinCat& c = r.entry->cat;
  SkeletonData s = compute_skeleton(c);

  REQUIRE(s.representatives.size() == 3);
  CHECK(s.representatives[0] == c.find_object("a"));
  CHECK(s.representatives[1] == c.find_object("b"));
  CHECK(s.representatives[2] == c.find_object("c"));

  CHECK(s.u[c.find_object("a")] == c.identity_of(c.find_object("a")));
  CHECK(s.u[c.find_object("c")] == c.identity_of(c.find_object("c")));
  CHECK(s.u[c.find_object("d")] == c.find_morphism("d->c"));

  CHECK(s.sk_cat.object_count() == 3);
  CHECK(s.sk_cat.morphism_count() == 5);  // ids + a->b + a->c
  CHECK(s.sk_cat.find_object("d") == -1);
  CHECK(s.sk_cat.find_morphism("a->b") >= 0);

  CHECK(s.nu.obj(c.find_object("d")) == c.find_object("c"));
  CHECK(s.nu.obj(c.find_object("a")) == c.find_object("a"));
  CHECK(s.nu.mor(c.find_morphism("a->d")) == c.find_morphism("a->c"));
  CHECK(s.nu.mor(c.find_morphism("d->c")) == c.identity_of(c.find_object("c")));

  CHECK(s.sk_obj_of_base[c.find_object("d")] == -1);
  CHECK(s.base_obj_of_sk[s.sk_obj_of_base[c.find_object("b")]] == c.find_object("b"));
  CHECK(s.sk_mor_of_base[c.find_morphism("c->d")] == -1);
}

TEST_CASE("the retraction is certified inner") {
  for (const char* name : {"p4", "e3", "isopair", "discrete:3", "finset:1,2,2"}) {
    CAPTURE(name);
    CatalogResult r = catalog(name);
    SkeletonData s = compute_skeleton(r.entry->cat);
    NatComponents w = verify_nu_inner(s);
    CHECK(w == s.u);
  }
}

TEST_CASE("e3 skeleton keeps the first class member") {
  CatalogResult r = catalog("e3");
  const FinCat& c = r.entry->cat;
  SkeletonData s = compute_skeleton(c);
  REQUIRE(s.representatives.size() == 2);
  CHECK(s.representatives[0] == c.find_object("e"));
  CHECK(s.representatives[1] == c.find_object("f"));
  CHECK(s.u[c.find_object("a")] == c.find_morphism("a->e"));
  CHECK(s.sk_cat.morphism_count() == 2);  // identities only
}

TEST_CASE("skeleton of an already-skeletal category is itself") {
  CatalogResult r = catalog("discrete:2");
  const FinCat& c = r.entry->cat;
  SkeletonData s = compute_skeleton(c);
  CHECK(s.sk_cat.object_count() == 2);
  CHECK(s.nu == identity_functor(c));
}

TEST_CASE("relabeled input order moves the representatives") {
  PreorderResult pr = from_preorder(
      {"d", "c", "b", "a"},
      {{"a", "b"}, {"a", "c"}, {"c", "d"}, {"d", "c"}}, true);
  REQUIRE(pr.ok());
  const FinCat& c = *pr.category;
  SkeletonData s = compute_skeleton(c);
  REQUIRE(s.representatives.size() == 3);
  // classes ordered by least input index: {d,c} then {b} then {a}
  CHECK(s.representatives[0] == c.find_object("d"));
  CHECK(s.representatives[1] == c.find_object("b"));
  CHECK(s.representatives[2] == c.find_object("a"));
  verify_nu_inner(s);
}

TEST_CASE("lifting a skeleton automorphism composes after the retraction") {
  CatalogResult r = catalog("e3");
  const FinCat& c = r.entry->cat;
  SkeletonData s = compute_skeleton(c);

  FinFunctor psi_id = identity_functor(s.sk_cat);
  FinFunctor lifted = lift_skeleton_automorphism(s, psi_id);
  CHECK(lifted == s.nu);

  // a functor over the wrong category is rejected
  CHECK_THROWS_AS(lift_skeleton_automorphism(s, identity_functor(c)),
                  std::invalid_argument);
}

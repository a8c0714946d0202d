#include <doctest.h>

#include <stdexcept>

#include "fincat/builders.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/equivalence.hpp"
#include "fincat/skeleton.hpp"

using namespace fincat;

namespace {

FinFunctor e3_exchange(const FinCat& c) {
  FunctorCheck fc = check_functor_ids(c, c, {{"e", "f"}, {"f", "e"}, {"a", "f"}},
                                      {{"e->a", "id:f"}, {"a->e", "id:f"}});
  REQUIRE(fc.ok());
  return *fc.functor;
}

}  // namespace

TEST_CASE("fiber criterion accepts the identity and flags the exchange") {
  CatalogResult r = catalog("e3");
  const FinCat& c = r.entry->cat;
  CHECK(fiber_criterion(identity_functor(c)).empty());

  FinFunctor phi = e3_exchange(c);
  std::vector<Obstruction> obs = fiber_criterion(phi);
  int e = c.find_object("e"), f = c.find_object("f"), a = c.find_object("a");
  std::vector<Obstruction> want = {
      {e, f, 2, 1}, {f, e, 1, 2}, {a, f, 2, 1}};
  CHECK(obs == want);
}

TEST_CASE("fiber criterion rejects non-equivalences") {
  CatalogResult r = catalog("discrete:2");
  const FinCat& c = r.entry->cat;
  FinFunctor constant{&c, &c, {0, 0}, {0, 0}};
  CHECK_THROWS_AS(fiber_criterion(constant), std::invalid_argument);
  CHECK_THROWS_AS(promote_to_isomorphism(constant), std::invalid_argument);
}

TEST_CASE("promotion fixes an automorphism") {
  CatalogResult r = catalog("p4");
  const FinCat& c = r.entry->cat;
  FunctorCheck sw = check_functor_ids(
      c, c, {{"a", "a"}, {"b", "b"}, {"c", "d"}, {"d", "c"}},
      {{"a->b", "a->b"}, {"a->c", "a->d"}, {"a->d", "a->c"},
       {"c->d", "d->c"}, {"d->c", "c->d"}});
  REQUIRE(sw.ok());
  PromotionResult pm = promote_to_isomorphism(*sw.functor);
  REQUIRE(pm.promoted());
  CHECK(*pm.phi == *sw.functor);
  NatTransCheck ntc = check_nat_trans(*pm.phi, *sw.functor, pm.tau);
  CHECK(ntc.ok);
  CHECK(ntc.all_components_iso);
}

TEST_CASE("promotion rejects the obstructed exchange") {
  CatalogResult r = catalog("e3");
  const FinCat& c = r.entry->cat;
  PromotionResult pm = promote_to_isomorphism(e3_exchange(c));
  CHECK_FALSE(pm.promoted());
  CHECK_FALSE(pm.phi);
  CHECK(pm.obstructions.size() == 3);
}

TEST_CASE("promotion straightens a non-automorphism equivalence") {
  CatalogResult r = catalog("isopair");
  const FinCat& c = r.entry->cat;
  FunctorCheck fc = check_functor_ids(c, c, {{"x", "x"}, {"y", "x"}},
                                      {{"x->y", "id:x"}, {"y->x", "id:x"}});
  REQUIRE(fc.ok());
  CHECK_FALSE(classify_functor(*fc.functor).isomorphism);
  PromotionResult pm = promote_to_isomorphism(*fc.functor);
  REQUIRE(pm.promoted());
  CHECK(*pm.phi == identity_functor(c));
  NatTransCheck ntc = check_nat_trans(*pm.phi, *fc.functor, pm.tau);
  CHECK(ntc.ok);
  CHECK(ntc.all_components_iso);
}

TEST_CASE("skeleton witnesses carry their properness verdict") {
  CatalogResult r = catalog("p4");
  const FinCat& c = r.entry->cat;
  SkeletonData s = compute_skeleton(c);

  SkeletonAutWitness trivial =
      proper_witness_from_skeleton_aut(s, identity_functor(s.sk_cat));
  CHECK_FALSE(trivial.proper);
  CHECK(trivial.obstructions.empty());
  CHECK(trivial.functor == s.nu);

  FunctorCheck psi = check_functor_ids(s.sk_cat, s.sk_cat,
                                       {{"a", "a"}, {"b", "c"}, {"c", "b"}},
                                       {{"a->b", "a->c"}, {"a->c", "a->b"}});
  REQUIRE(psi.ok());
  SkeletonAutWitness w = proper_witness_from_skeleton_aut(s, *psi.functor);
  CHECK(w.proper);
  CHECK(w.obstructions.size() == 3);
}

TEST_CASE("proper verdicts per mode") {
  CatalogResult p4 = catalog("p4");
  Budget b1(kDefaultBudget);
  ProperResult crit =
      has_proper_autoequivalence(p4.entry->cat, ProperMode::kCriterion, b1);
  CHECK(crit.verdict == ProperVerdict::kProper);
  CHECK(crit.criterion_verdict == ProperVerdict::kProper);
  CHECK_FALSE(crit.oracle_verdict.has_value());
  REQUIRE(crit.witness);
  CHECK_FALSE(crit.witness_obstructions.empty());

  Budget b2(kDefaultBudget);
  ProperResult orac = has_proper_autoequivalence(p4.entry->cat, ProperMode::kOracle, b2);
  CHECK(orac.verdict == ProperVerdict::kProper);
  CHECK(orac.oracle_verdict == ProperVerdict::kProper);
  CHECK_FALSE(orac.criterion_verdict.has_value());

  Budget b3(kDefaultBudget);
  ProperResult both = has_proper_autoequivalence(p4.entry->cat, ProperMode::kBoth, b3);
  CHECK(both.modes_agree);
  CHECK(both.verdict == ProperVerdict::kProper);

  CatalogResult d2 = catalog("discrete:2");
  Budget b4(kDefaultBudget);
  ProperResult none = has_proper_autoequivalence(d2.entry->cat, ProperMode::kBoth, b4);
  CHECK(none.verdict == ProperVerdict::kNoProper);
  CHECK(none.modes_agree);
  CHECK_FALSE(none.witness);
}

TEST_CASE("uniform class sizes") {
  CHECK_FALSE(uniform_class_check(catalog("p4").entry->cat));
  CHECK_FALSE(uniform_class_check(catalog("e3").entry->cat));
  CHECK(uniform_class_check(catalog("isopair").entry->cat));
  CHECK(uniform_class_check(catalog("discrete:3").entry->cat));
  CHECK(uniform_class_check(catalog("discrete:0").entry->cat));
}

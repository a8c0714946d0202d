#include <doctest.h>

#include <algorithm>

#include "fincat/category.hpp"

using namespace fincat;

namespace {

bool has_law(const ValidationReport& r, const std::string& law) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

RawCategory arrow_cat() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", "a", "b"}};
  return raw;
}

RawCategory iso_cat() {
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"u", "x", "y"}, {"v", "y", "x"}};
  raw.compose = {{"u", "v", "id:x"}, {"v", "u", "id:y"}};
  return raw;
}

}  // namespace

TEST_CASE("single arrow validates with synthesized identities") {
  auto res = validate_category(arrow_cat());
  REQUIRE(res.report.ok());
  const FinCat& c = *res.category;
  CHECK(c.object_count() == 2);
  CHECK(c.morphism_count() == 3);  // two identities + f
  CHECK(c.is_identity(0));
  CHECK(c.is_identity(1));
  CHECK_FALSE(c.is_identity(2));

  int a = c.find_object("a");
  int b = c.find_object("b");
  int f = c.find_morphism("f");
  REQUIRE(f >= 0);
  CHECK(c.morphism(f).dom == a);
  CHECK(c.morphism(f).cod == b);
  CHECK(c.identity_of(a) == c.find_morphism("id:a"));

  // identity laws in the composition table
  CHECK(c.compose(c.identity_of(a), f) == f);
  CHECK(c.compose(f, c.identity_of(b)) == f);
  CHECK(c.compose(f, f) == -1);  // not composable

  CHECK(c.hom(a, b).size() == 1);
  CHECK(c.hom(b, a).empty());
  CHECK(c.find_object("zzz") == -1);
  CHECK(c.find_morphism("zzz") == -1);
  CHECK(c.nonidentity_morphisms() == std::vector<int>{f});
}

TEST_CASE("two-sided inverses produce one isomorphism class") {
  auto res = validate_category(iso_cat());
  REQUIRE(res.report.ok());
  const FinCat& c = *res.category;
  int u = c.find_morphism("u");
  int v = c.find_morphism("v");
  CHECK(c.inverse_of(u) == v);
  CHECK(c.inverse_of(v) == u);
  CHECK(c.is_isomorphism(u));
  CHECK(c.is_isomorphism(v));

  const IsoPartition& p = c.iso_classes();
  REQUIRE(p.classes.size() == 1);
  CHECK(p.classes[0] == std::vector<int>{0, 1});
  CHECK(c.class_size_of(0) == 2);
}

TEST_CASE("identities are not isomorphism-free") {
  auto res = validate_category(arrow_cat());
  const FinCat& c = *res.category;
  CHECK(c.inverse_of(c.identity_of(0)) == c.identity_of(0));
  CHECK(c.inverse_of(c.find_morphism("f")) == -1);
  CHECK(c.iso_classes().classes.size() == 2);
}

TEST_CASE("duplicate ids are rejected") {
  RawCategory raw = arrow_cat();
  raw.objects.push_back("a");
  auto res = validate_category(raw);
  CHECK_FALSE(res.report.ok());
  CHECK(has_law(res.report, "duplicate-id"));

  raw = arrow_cat();
  raw.morphisms.push_back({"f", "b", "a"});
  res = validate_category(raw);
  CHECK(has_law(res.report, "duplicate-id"));
}

TEST_CASE("reserved identity prefix is rejected") {
  RawCategory raw = arrow_cat();
  raw.morphisms.push_back({"id:zzz", "a", "b"});
  auto res = validate_category(raw);
  CHECK(has_law(res.report, "reserved-id"));
}

TEST_CASE("dangling references are rejected") {
  RawCategory raw;
  raw.objects = {"a"};
  raw.morphisms = {{"f", "a", "nope"}};
  auto res = validate_category(raw);
  CHECK(has_law(res.report, "dangling-ref"));
}

TEST_CASE("missing composites are rejected") {
  RawCategory raw;
  raw.objects = {"a", "b", "c"};
  raw.morphisms = {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}};
  auto res = validate_category(raw);  // (f, g) never given
  CHECK_FALSE(res.report.ok());
  CHECK(has_law(res.report, "missing-composite"));

  raw.compose = {{"f", "g", "h"}};
  res = validate_category(raw);
  CHECK(res.report.ok());
  const FinCat& c = *res.category;
  CHECK(c.compose(c.find_morphism("f"), c.find_morphism("g")) == c.find_morphism("h"));
}

TEST_CASE("ill-typed and conflicting composites are rejected") {
  RawCategory raw;
  raw.objects = {"a", "b", "c"};
  raw.morphisms = {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}, {"k", "b", "c"}};
  raw.compose = {{"f", "g", "g"}, {"f", "k", "h"}};  // h: a->c but g: b->c
  auto res = validate_category(raw);
  CHECK(has_law(res.report, "ill-typed-composite"));

  raw.compose = {{"f", "g", "h"}, {"f", "k", "h"}, {"f", "g", "h"}};
  res = validate_category(raw);  // duplicate triple is fine, same value
  CHECK(res.report.ok());

  raw.morphisms.push_back({"h2", "a", "c"});
  raw.compose = {{"f", "g", "h"}, {"f", "g", "h2"}, {"f", "k", "h"}};
  res = validate_category(raw);
  CHECK(has_law(res.report, "conflicting-composite"));
}

TEST_CASE("non-composable compose entries are rejected") {
  RawCategory raw = arrow_cat();
  raw.compose = {{"f", "f", "f"}};
  auto res = validate_category(raw);
  CHECK(has_law(res.report, "not-composable"));
}

TEST_CASE("associativity is verified over all triples") {
  RawCategory raw;
  raw.objects = {"a"};
  raw.morphisms = {{"f", "a", "a"}, {"g", "a", "a"}};
  // (f f) f = g f = f, but f (f f) = f g = g
  raw.compose = {{"f", "f", "g"}, {"f", "g", "g"}, {"g", "f", "f"}, {"g", "g", "f"}};
  auto res = validate_category(raw);
  CHECK_FALSE(res.report.ok());
  CHECK(has_law(res.report, "associativity"));
}

TEST_CASE("an associative loop monoid validates") {
  RawCategory raw;
  raw.objects = {"a"};
  raw.morphisms = {{"f", "a", "a"}};
  raw.compose = {{"f", "f", "f"}};  // idempotent
  auto res = validate_category(raw);
  REQUIRE(res.report.ok());
  const FinCat& c = *res.category;
  int f = c.find_morphism("f");
  CHECK(c.compose(f, f) == f);
  CHECK(c.inverse_of(f) == -1);  // f f = f != id, so no inverse
}

TEST_CASE("empty category validates") {
  auto res = validate_category(RawCategory{});
  REQUIRE(res.report.ok());
  CHECK(res.category->object_count() == 0);
  CHECK(res.category->morphism_count() == 0);
  CHECK(res.category->iso_classes().classes.empty());
}

#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "fincat/builders.hpp"
#include "fincat/json_io.hpp"

using namespace fincat;

namespace {

bool has_law(const std::vector<Violation>& vs, const std::string& law) {
  for (const auto& v : vs)
    if (v.law == law) return true;
  return false;
}

}  // namespace

TEST_CASE("explicit category text loads") {
  const std::string text = R"({
    "format_version": 1,
    "objects": ["x", "y"],
    "morphisms": [
      {"id": "x->y", "dom": "x", "cod": "y"},
      {"id": "y->x", "dom": "y", "cod": "x"}
    ],
    "compose": [
      ["x->y", "y->x", "id:x"],
      ["y->x", "x->y", "id:y"]
    ]
  })";
  LoadedCategory lc = load_category_text(text);
  REQUIRE(lc.ok());
  CHECK(lc.category->object_count() == 2);
  CHECK(lc.category->morphism_count() == 4);
  CHECK_FALSE(lc.concrete.has_value());
}

TEST_CASE("preorder text form loads and closes") {
  const std::string text = R"({
    "format_version": 1,
    "preorder": {"elements": ["x", "y"], "le": [["x", "y"]], "close": true}
  })";
  LoadedCategory lc = load_category_text(text);
  REQUIRE(lc.ok());
  CHECK(lc.category->object_count() == 2);
  CHECK(lc.category->morphism_count() == 3);
  CHECK(lc.category->find_morphism("x->y") >= 0);
}

TEST_CASE("category serialization round-trips byte for byte") {
  SUBCASE("plain category") {
    CatalogResult r = catalog("p4");
    std::string first = category_json(r.entry->cat);
    LoadedCategory lc = load_category_text(first);
    REQUIRE(lc.ok());
    CHECK(category_json(*lc.category) == first);
  }
  SUBCASE("concrete category") {
    CatalogResult r = catalog("finset:1,2,2");
    std::string first = category_json(r.entry->cat, &*r.entry->concrete);
    LoadedCategory lc = load_category_text(first);
    REQUIRE(lc.ok());
    REQUIRE(lc.concrete);
    CHECK(category_json(*lc.category, &*lc.concrete) == first);
  }
}

TEST_CASE("loader reports malformed input") {
  SUBCASE("json-parse") {
    LoadedCategory lc = load_category_text("{not json");
    CHECK_FALSE(lc.ok());
    CHECK(has_law(lc.violations, "json-parse"));
  }
  SUBCASE("unknown-key") {
    LoadedCategory lc = load_category_text(
        R"({"format_version": 1, "objects": ["x"], "bogus": true})");
    CHECK_FALSE(lc.ok());
    CHECK(has_law(lc.violations, "unknown-key"));
  }
  SUBCASE("format-version missing") {
    LoadedCategory lc = load_category_text(R"({"objects": ["x"]})");
    CHECK_FALSE(lc.ok());
    CHECK(has_law(lc.violations, "format-version"));
  }
  SUBCASE("format-version wrong") {
    LoadedCategory lc =
        load_category_text(R"({"format_version": 2, "objects": ["x"]})");
    CHECK_FALSE(lc.ok());
    CHECK(has_law(lc.violations, "format-version"));
  }
  SUBCASE("mixed input shapes") {
    LoadedCategory lc = load_category_text(
        R"({"format_version": 1, "objects": ["x"],
            "preorder": {"elements": ["x"]}})");
    CHECK_FALSE(lc.ok());
    CHECK(has_law(lc.violations, "input-shape"));
  }
  SUBCASE("mor_fn without underlying") {
    LoadedCategory lc = load_category_text(
        R"({"format_version": 1, "objects": ["x"], "mor_fn": {}})");
    CHECK_FALSE(lc.ok());
    CHECK(has_law(lc.violations, "input-shape"));
  }
}

TEST_CASE("functor text round-trips") {
  CatalogResult r = catalog("p4");
  const FinCat& c = r.entry->cat;
  FunctorCheck sw = check_functor_ids(
      c, c, {{"a", "a"}, {"b", "b"}, {"c", "d"}, {"d", "c"}},
      {{"a->b", "a->b"}, {"a->c", "a->d"}, {"a->d", "a->c"},
       {"c->d", "d->c"}, {"d->c", "c->d"}});
  REQUIRE(sw.ok());
  std::string text = functor_json(*sw.functor);
  LoadedFunctor lf = load_functor_text(text, c, c);
  REQUIRE(lf.ok());
  CHECK(*lf.functor == *sw.functor);
  CHECK(functor_json(*lf.functor) == text);
}

TEST_CASE("input digest matches the reference vector") {
  CHECK(input_digest({"abc"}) ==
        "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(input_digest({"ab", "c"}) == input_digest({"abc"}));
}

TEST_CASE("reports have a fixed shape and are reproducible") {
  ReportStats stats{42, 0};
  std::string a = make_report("validate", input_digest({"x"}), "ok", stats,
                              R"({"valid":true})", "{}");
  std::string b = make_report("validate", input_digest({"x"}), "ok", stats,
                              R"({"valid":true})", "{}");
  CHECK(a == b);

  nlohmann::json j = nlohmann::json::parse(a);
  REQUIRE(j.is_object());
  CHECK(j.size() == 7);
  CHECK(j.contains("witnesses"));
  CHECK(j.contains("command"));
  CHECK(j.contains("format_version"));
  CHECK(j.contains("input_digest"));
  CHECK(j.contains("result"));
  CHECK(j.contains("stats"));
  CHECK(j.contains("status"));
  CHECK(j["format_version"] == 1);
  CHECK(j["command"] == "validate");
  CHECK(j["status"] == "ok");
  CHECK(j["stats"]["nodes_visited"] == 42);

  std::string text = render_text(a);
  CHECK(text.find("command") != std::string::npos);
  CHECK_FALSE(text.empty());
}

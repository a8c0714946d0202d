#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fincat/builders.hpp"
#include "fincat/category.hpp"
#include "fincat/concrete.hpp"
#include "fincat/endo_quotient.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/equivalence.hpp"
#include "fincat/functor.hpp"
#include "fincat/json_io.hpp"
#include "fincat/skeleton.hpp"
#include "fincat/suite.hpp"

namespace {

using namespace fincat;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct CommonOpts {
  std::string input;
  std::string format = "text";
  std::string out;
  long long budget = kDefaultBudget;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
  if (with_input)
    cmd->add_option("input", o.input, "category file (JSON)")->required();
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
  cmd->add_option("--budget", o.budget, "search node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--workers", o.workers, "parallel search workers")
      ->check(CLI::Range(1, 64));
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  f << text;
  return 0;
}

int emit(const std::string& report_json, const CommonOpts& o) {
  return write_output(o.format == "json" ? report_json : render_text(report_json), o.out);
}

std::string violation_payload(const std::string& law, const std::string& detail) {
  return validate_json(nullptr, nullptr, {Violation{law, detail}});
}

// Loads the input file and its category; on failure emits an invalid-input
// report and returns exit code 2 through `code`.
struct LoadedInput {
  std::string text;
  std::string digest;
  LoadedCategory cat;
};

std::optional<LoadedInput> load_input(const std::string& command, const CommonOpts& o,
                                      const Timer& t, int& code) {
  std::optional<std::string> text = read_file(o.input);
  if (!text) {
    std::cerr << "error: cannot read '" << o.input << "'\n";
    code = 2;
    return std::nullopt;
  }
  LoadedInput in;
  in.text = std::move(*text);
  in.digest = input_digest({in.text});
  in.cat = load_category_text(in.text);
  if (!in.cat.ok()) {
    const FinCat* c = in.cat.category ? &*in.cat.category : nullptr;
    std::string rep =
        make_report(command, in.digest, "invalid-input", {0, t.ms()},
                    validate_json(c, nullptr, in.cat.violations), "{}");
    int ec = emit(rep, o);
    code = ec != 0 ? ec : 2;
    return std::nullopt;
  }
  return in;
}

int cmd_validate(const CommonOpts& o) {
  Timer t;
  std::optional<std::string> text = read_file(o.input);
  if (!text) {
    std::cerr << "error: cannot read '" << o.input << "'\n";
    return 2;
  }
  LoadedCategory lc = load_category_text(*text);
  const FinCat* c = lc.category ? &*lc.category : nullptr;
  const ConcreteData* k = lc.concrete ? &*lc.concrete : nullptr;
  std::string status = lc.ok() ? "ok" : "invalid-input";
  std::string rep = make_report("validate", input_digest({*text}), status, {0, t.ms()},
                                validate_json(c, k, lc.violations), "{}");
  int ec = emit(rep, o);
  if (ec != 0) return ec;
  return lc.ok() ? 0 : 2;
}

int cmd_skeleton(const CommonOpts& o) {
  Timer t;
  int code = 0;
  std::optional<LoadedInput> in = load_input("skeleton", o, t, code);
  if (!in) return code;
  const FinCat& c = *in->cat.category;
  SkeletonData s = compute_skeleton(c);
  NatComponents inner = verify_nu_inner(s);
  std::string rep = make_report("skeleton", in->digest, "ok", {0, t.ms()},
                                skeleton_json(s),
                                "{\"inner\":" + components_json(c, c, inner) + "}");
  return emit(rep, o);
}

int cmd_enumerate(const std::string& command, const CommonOpts& o, bool autos_only) {
  Timer t;
  int code = 0;
  std::optional<LoadedInput> in = load_input(command, o, t, code);
  if (!in) return code;
  const FinCat& c = *in->cat.category;
  Budget budget(o.budget);
  std::string status = "ok";
  std::string result = "{}";
  int exit_code = 0;
  try {
    std::vector<FinFunctor> fs =
        autos_only ? enumerate_automorphisms(c, budget, {o.workers})
                   : enumerate_autoequivalences(c, budget, {o.workers});
    result = functor_list_json(fs);
  } catch (const BudgetExceeded&) {
    status = "budget-exceeded";
    exit_code = 3;
  }
  std::string rep =
      make_report(command, in->digest, status, {budget.used(), t.ms()}, result, "{}");
  int ec = emit(rep, o);
  return ec != 0 ? ec : exit_code;
}

int cmd_proper(const CommonOpts& o, const std::string& mode_name) {
  Timer t;
  int code = 0;
  std::optional<LoadedInput> in = load_input("proper", o, t, code);
  if (!in) return code;
  const FinCat& c = *in->cat.category;
  ProperMode mode = mode_name == "criterion" ? ProperMode::kCriterion
                    : mode_name == "oracle"  ? ProperMode::kOracle
                                             : ProperMode::kBoth;
  Budget budget(o.budget);
  std::string status = "ok";
  std::string result;
  int exit_code = 0;
  try {
    ProperResult pr = has_proper_autoequivalence(c, mode, budget, {o.workers});
    result = proper_json(c, pr);
  } catch (const BudgetExceeded&) {
    status = "budget-exceeded";
    result = inconclusive_proper_json();
    exit_code = 3;
  }
  std::string rep =
      make_report("proper", in->digest, status, {budget.used(), t.ms()}, result, "{}");
  int ec = emit(rep, o);
  return ec != 0 ? ec : exit_code;
}

int cmd_promote(const CommonOpts& o, const std::string& functor_path,
                const std::string& target_path) {
  Timer t;
  int code = 0;
  std::optional<LoadedInput> in = load_input("promote", o, t, code);
  if (!in) return code;
  const FinCat& src = *in->cat.category;

  std::vector<std::string> digest_parts = {in->text};
  LoadedCategory target_loaded;
  const FinCat* tgt = &src;
  if (!target_path.empty()) {
    std::optional<std::string> ttext = read_file(target_path);
    if (!ttext) {
      std::cerr << "error: cannot read '" << target_path << "'\n";
      return 2;
    }
    digest_parts.push_back(*ttext);
    target_loaded = load_category_text(*ttext);
    if (!target_loaded.ok()) {
      std::string rep = make_report(
          "promote", input_digest(digest_parts), "invalid-input", {0, t.ms()},
          validate_json(nullptr, nullptr, target_loaded.violations), "{}");
      int ec = emit(rep, o);
      return ec != 0 ? ec : 2;
    }
    tgt = &*target_loaded.category;
  }

  std::optional<std::string> ftext = read_file(functor_path);
  if (!ftext) {
    std::cerr << "error: cannot read '" << functor_path << "'\n";
    return 2;
  }
  digest_parts.push_back(*ftext);
  const std::string digest = input_digest(digest_parts);

  LoadedFunctor lf = load_functor_text(*ftext, src, *tgt);
  if (!lf.ok()) {
    std::string rep = make_report("promote", digest, "invalid-input", {0, t.ms()},
                                  validate_json(nullptr, nullptr, lf.violations), "{}");
    int ec = emit(rep, o);
    return ec != 0 ? ec : 2;
  }

  std::string status = "ok";
  std::string result;
  int exit_code = 0;
  try {
    PromotionResult pm = promote_to_isomorphism(*lf.functor);
    result = promotion_json(*lf.functor, pm);
  } catch (const std::invalid_argument& e) {
    status = "invalid-input";
    result = violation_payload("not-an-equivalence", e.what());
    exit_code = 2;
  }
  std::string rep = make_report("promote", digest, status, {0, t.ms()}, result, "{}");
  int ec = emit(rep, o);
  return ec != 0 ? ec : exit_code;
}

int cmd_quotient(const CommonOpts& o, const EndoQuotientCaps& caps) {
  Timer t;
  int code = 0;
  std::optional<LoadedInput> in = load_input("quotient", o, t, code);
  if (!in) return code;
  const FinCat& c = *in->cat.category;
  Budget budget(o.budget);
  std::string status = "ok";
  std::string result = "{}";
  int exit_code = 0;
  try {
    EndoMonoidQuotient q = endo_quotient(c, budget, {o.workers}, caps);
    result = quotient_json(q);
  } catch (const BudgetExceeded&) {
    status = "budget-exceeded";
    exit_code = 3;
  } catch (const CapExceeded& e) {
    status = "budget-exceeded";
    result = violation_payload("cap-exceeded", e.what());
    exit_code = 3;
  }
  std::string rep =
      make_report("quotient", in->digest, status, {budget.used(), t.ms()}, result, "{}");
  int ec = emit(rep, o);
  return ec != 0 ? ec : exit_code;
}

int cmd_concrete(const CommonOpts& o, const std::string& witness_id, int size_cap) {
  Timer t;
  int code = 0;
  std::optional<LoadedInput> in = load_input("concrete", o, t, code);
  if (!in) return code;
  const FinCat& c = *in->cat.category;
  if (!in->cat.concrete) {
    std::string rep = make_report(
        "concrete", in->digest, "invalid-input", {0, t.ms()},
        violation_payload("missing-underlying", "the file has no underlying block"),
        "{}");
    int ec = emit(rep, o);
    return ec != 0 ? ec : 2;
  }
  ConcreteFinCat k{c, *in->cat.concrete};
  int witness = -1;
  if (!witness_id.empty()) {
    witness = k.cat.find_object(witness_id);
    if (witness < 0) {
      std::string rep = make_report(
          "concrete", in->digest, "invalid-input", {0, t.ms()},
          violation_payload("unknown-object", "witness '" + witness_id + "'"), "{}");
      int ec = emit(rep, o);
      return ec != 0 ? ec : 2;
    }
  }
  std::string status = "ok";
  std::string result;
  int exit_code = 0;
  try {
    StarCheckResult star = check_star_condition(k, size_cap);
    std::string rep_part = "null";
    if (witness >= 0) {
      std::optional<Representation> rep = find_representation(k, witness, size_cap);
      if (rep) rep_part = representation_json(k.cat, *rep);
    }
    result = "{\"star\":" + star_json(k, star) + ",\"representation\":" + rep_part + "}";
  } catch (const CapExceeded& e) {
    status = "budget-exceeded";
    result = violation_payload("cap-exceeded", e.what());
    exit_code = 3;
  }
  std::string rep =
      make_report("concrete", in->digest, status, {0, t.ms()}, result, "{}");
  int ec = emit(rep, o);
  return ec != 0 ? ec : exit_code;
}

int cmd_gen(const std::string& example, const std::string& out_path) {
  CatalogResult r = catalog(example);
  if (!r.entry) {
    std::cerr << "error: " << r.error << "\n";
    return r.cap_exceeded ? 3 : 2;
  }
  const ConcreteData* k = r.entry->concrete ? &*r.entry->concrete : nullptr;
  return write_output(category_json(r.entry->cat, k), out_path);
}

int cmd_suite(const std::string& scope_name, const CommonOpts& o) {
  Timer t;
  std::optional<SuiteScope> scope = parse_suite_scope(scope_name);
  if (!scope) {
    std::cerr << "error: unknown scope '" << scope_name
              << "' (expected fast, exhaustive-3, or full)\n";
    return 2;
  }
  SuiteOptions sopts;
  sopts.budget = o.budget;
  sopts.workers = o.workers;
  SuiteResult res = run_suite(*scope, sopts);

  nlohmann::json cases = nlohmann::json::array();
  int passed = 0;
  for (const SuiteCase& c : res.cases) {
    nlohmann::json e;
    e["criterion"] = c.criterion;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    cases.push_back(std::move(e));
    if (c.passed) ++passed;
  }
  nlohmann::json result;
  result["scope"] = suite_scope_name(*scope);
  result["total"] = static_cast<int>(res.cases.size());
  result["passed"] = passed;
  result["failed"] = static_cast<int>(res.cases.size()) - passed;
  result["cases"] = std::move(cases);

  std::string rep = make_report("suite", input_digest({suite_scope_name(*scope)}), "ok",
                                {res.nodes_visited, t.ms()}, result.dump(), "{}");
  int ec = emit(rep, o);
  if (ec != 0) return ec;
  return res.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category analysis: equivalences, skeletons, and rigidity"};
  app.require_subcommand(1);

  CommonOpts validate_o;
  CLI::App* validate = app.add_subcommand("validate", "check a category file");
  add_common(validate, validate_o);

  CommonOpts skeleton_o;
  CLI::App* skeleton = app.add_subcommand(
      "skeleton", "skeleton, chosen isomorphisms, and the retraction");
  add_common(skeleton, skeleton_o);

  CommonOpts autoequiv_o;
  CLI::App* autoequiv =
      app.add_subcommand("autoequiv", "enumerate all autoequivalences");
  add_common(autoequiv, autoequiv_o);

  CommonOpts automorphisms_o;
  CLI::App* automorphisms =
      app.add_subcommand("automorphisms", "enumerate all automorphisms");
  add_common(automorphisms, automorphisms_o);

  CommonOpts proper_o;
  std::string proper_mode = "both";
  CLI::App* proper =
      app.add_subcommand("proper", "decide whether a proper autoequivalence exists");
  add_common(proper, proper_o);
  proper->add_option("--mode", proper_mode, "decision procedure")
      ->check(CLI::IsMember({"criterion", "oracle", "both"}));

  CommonOpts promote_o;
  std::string promote_functor, promote_target;
  CLI::App* promote =
      app.add_subcommand("promote", "promote an equivalence to an isomorphism");
  add_common(promote, promote_o);
  promote->add_option("--functor", promote_functor, "functor file (JSON)")->required();
  promote->add_option("--target", promote_target,
                      "target category file (defaults to the input category)");

  CommonOpts quotient_o;
  EndoQuotientCaps quotient_caps;
  CLI::App* quotient = app.add_subcommand(
      "quotient", "endofunctor monoid modulo natural isomorphism");
  add_common(quotient, quotient_o);
  quotient->add_option("--max-objects", quotient_caps.max_objects,
                       "object-count guard for the quotient");
  quotient->add_option("--max-morphisms", quotient_caps.max_morphisms,
                       "morphism-count guard for the quotient");

  CommonOpts concrete_o;
  std::string concrete_witness;
  int concrete_size_cap = kDefaultSizeCap;
  CLI::App* concrete = app.add_subcommand(
      "concrete", "underlying-set checks: transport condition and representations");
  add_common(concrete, concrete_o);
  concrete->add_option("--witness", concrete_witness,
                       "object at which to search for a representation");
  concrete->add_option("--size-cap", concrete_size_cap,
                       "largest underlying set the bijection search accepts");

  std::string gen_example, gen_out;
  CLI::App* gen = app.add_subcommand("gen", "write a catalog example as a category file");
  gen->add_option("--example", gen_example, "catalog name")->required();
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");

  CommonOpts suite_o;
  suite_o.budget = 10'000'000;
  std::string suite_scope = "fast";
  CLI::App* suite = app.add_subcommand("suite", "run the self-check battery");
  suite->add_option("scope", suite_scope, "fast, exhaustive-3, or full");
  suite->add_option("--format", suite_o.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  suite->add_option("--out", suite_o.out, "write the report to this file");
  suite->add_option("--budget", suite_o.budget, "per-case search node budget")
      ->check(CLI::PositiveNumber);
  suite->add_option("--workers", suite_o.workers, "parallel search workers")
      ->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_o);
    if (skeleton->parsed()) return cmd_skeleton(skeleton_o);
    if (autoequiv->parsed()) return cmd_enumerate("autoequiv", autoequiv_o, false);
    if (automorphisms->parsed())
      return cmd_enumerate("automorphisms", automorphisms_o, true);
    if (proper->parsed()) return cmd_proper(proper_o, proper_mode);
    if (promote->parsed()) return cmd_promote(promote_o, promote_functor, promote_target);
    if (quotient->parsed()) return cmd_quotient(quotient_o, quotient_caps);
    if (concrete->parsed())
      return cmd_concrete(concrete_o, concrete_witness, concrete_size_cap);
    if (gen->parsed()) return cmd_gen(gen_example, gen_out);
    if (suite->parsed()) return cmd_suite(suite_scope, suite_o);
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

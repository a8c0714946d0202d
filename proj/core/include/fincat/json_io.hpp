#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/concrete.hpp"
#include "fincat/endo_quotient.hpp"
#include "fincat/equivalence.hpp"
#include "fincat/functor.hpp"
#include "fincat/skeleton.hpp"

namespace fincat {

/// Result of parsing and validating one category file (explicit or preorder
/// form, optional underlying block). Violations cover JSON shape errors and
/// category/concrete law failures alike.
struct LoadedCategory {
  std::optional<FinCat> category;
  std::optional<ConcreteData> concrete;  // engaged when an underlying block parsed
  std::vector<Violation> violations;
  bool ok() const { return violations.empty() && category.has_value(); }
};

LoadedCategory load_category_text(const std::string& text);

/// Functor file: {"format_version":1,"obj_map":{...},"mor_map":{...}} with
/// identity entries optional.
struct LoadedFunctor {
  std::optional<FinFunctor> functor;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty() && functor.has_value(); }
};

LoadedFunctor load_functor_text(const std::string& text, const FinCat& source,
                                const FinCat& target);

std::string sha256_hex(const std::string& bytes);

/// "sha256:<hex>" over the concatenation of the inputs in the given order.
std::string input_digest(const std::vector<std::string>& inputs);

/// Canonical category file: explicit form, two-space indent, trailing
/// newline, keys sorted. Re-parsing and re-serializing reproduces the exact
/// bytes.
std::string category_json(const FinCat& c, const ConcreteData* concrete = nullptr);

// Compact JSON fragments for report payloads. Each returns one JSON value.
std::string functor_json(const FinFunctor& f);
std::string functor_list_json(const std::vector<FinFunctor>& fs);
std::string validate_json(const FinCat* c, const ConcreteData* concrete,
                          const std::vector<Violation>& violations);
std::string components_json(const FinCat& source, const FinCat& target,
                            const NatComponents& comps);
std::string violations_json(const std::vector<Violation>& violations);
std::string obstructions_json(const FinCat& source, const FinCat& target,
                              const std::vector<Obstruction>& obs);
std::string skeleton_json(const SkeletonData& s);
std::string promotion_json(const FinFunctor& pi, const PromotionResult& r);
std::string proper_json(const FinCat& c, const ProperResult& r);
std::string inconclusive_proper_json();
std::string quotient_json(const EndoMonoidQuotient& q);
std::string star_json(const ConcreteFinCat& k, const StarCheckResult& r);
std::string representation_json(const FinCat& c, const Representation& rep);

struct ReportStats {
  long long nodes_visited = 0;
  long long elapsed_ms = 0;
};

/// Assembles the full report envelope: {"command", "format_version",
/// "input_digest", "result", "stats", "status", "witnesses"}, two-space
/// indent plus trailing newline, keys sorted. result_json and witnesses_json
/// must each hold one JSON value.
std::string make_report(const std::string& command, const std::string& digest,
                        const std::string& status, const ReportStats& stats,
                        const std::string& result_json, const std::string& witnesses_json);

/// Deterministic plain-text rendering of a report produced by make_report.
std::string render_text(const std::string& report_json);

}  // namespace fincat

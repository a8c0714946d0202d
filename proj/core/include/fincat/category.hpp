#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fincat {

/// One violated category law, with enough context to locate the offender.
struct Violation {
  std::string law;     // e.g. "duplicate-id", "identity", "associativity"
  std::string detail;  // the offending ids / triple
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Raw input shape of a category before any law is checked. Identities are
/// implicit: they are synthesized with the reserved id "id:<object>", and
/// user-supplied morphism ids starting with "id:" are rejected.
struct RawMorphism {
  std::string id;
  std::string dom;
  std::string cod;
};

struct RawCompose {
  std::string f;  // first
  std::string g;  // second
  std::string h;  // composite "f then g"
};

struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;  // non-identity morphisms only
  std::vector<RawCompose> compose;
};

/// Partition of the objects into isomorphism classes. Two objects share a
/// class exactly when some morphism between them has a two-sided inverse.
/// Classes are ordered by their smallest member's input index; members are
/// listed in input order.
struct IsoPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // object index -> class index
};

/// A validated finite category: explicit object and morphism lists plus a
/// composition table that is total on composable pairs.
///
/// Composition is written diagrammatically: compose(f, g) is "f then g",
/// defined exactly when cod(f) == dom(g). All data is immutable after
/// construction, so instances may be shared freely across threads.
///
/// Morphism order: the identities come first (one per object, in object
/// order), followed by the non-identity morphisms in input order. "Input
/// order" in tie-breaking rules always refers to this internal order.
class FinCat {
 public:
  struct Morphism {
    std::string id;
    int dom;
    int cod;
  };

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_id(int obj) const { return objects_[obj]; }
  const Morphism& morphism(int mor) const { return morphisms_[mor]; }

  int identity_of(int obj) const { return identity_[obj]; }
  bool is_identity(int mor) const { return mor < object_count(); }

  /// "f then g"; -1 when cod(f) != dom(g).
  int compose(int f, int g) const { return compose_[f * morphism_count() + g]; }

  /// Morphism indices with the given endpoints, in input order.
  const std::vector<int>& hom(int dom, int cod) const {
    return hom_[dom * object_count() + cod];
  }

  int find_object(std::string_view id) const;
  int find_morphism(std::string_view id) const;

  /// Index of the unique two-sided inverse, or -1 when none exists.
  int inverse_of(int mor) const { return inverse_[mor]; }
  bool is_isomorphism(int mor) const { return inverse_[mor] >= 0; }

  const IsoPartition& iso_classes() const { return classes_; }
  int class_size_of(int obj) const {
    return static_cast<int>(classes_.classes[classes_.class_of[obj]].size());
  }

  /// Non-identity morphism indices in input order (for serialization).
  std::vector<int> nonidentity_morphisms() const;

  /// The empty category. Anything larger comes from validate_category.
  FinCat() = default;

 private:
  friend struct CategoryBuilder;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;           // object -> morphism index
  std::vector<int> compose_;            // dense m*m, -1 = undefined
  std::vector<std::vector<int>> hom_;   // dense n*n
  std::vector<int> inverse_;            // morphism -> inverse index or -1
  IsoPartition classes_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> morphism_index_;
};

struct CategoryValidation {
  std::optional<FinCat> category;  // engaged exactly when report.ok()
  ValidationReport report;
};

/// Checks every category law against the raw input: id uniqueness, the
/// reserved "id:" prefix, dangling references, totality and typing of the
/// composition table, the identity laws, and associativity over all
/// composable triples. Violations are collected, not short-circuited.
CategoryValidation validate_category(const RawCategory& raw);

/// Reserved identity prefix for synthesized morphism ids.
inline constexpr std::string_view kIdentityPrefix = "id:";

}  // namespace fincat

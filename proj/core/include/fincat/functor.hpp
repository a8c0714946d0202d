#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A functor between two validated finite categories, stored as dense index
/// maps. The referenced categories must outlive the functor; equality of
/// source/target across functors means pointer identity.
struct FinFunctor {
  const FinCat* source = nullptr;
  const FinCat* target = nullptr;
  std::vector<int> obj_map;  // source object index -> target object index
  std::vector<int> mor_map;  // source morphism index -> target morphism index

  int obj(int o) const { return obj_map[o]; }
  int mor(int m) const { return mor_map[m]; }

  friend bool operator==(const FinFunctor& a, const FinFunctor& b) {
    return a.source == b.source && a.target == b.target &&
           a.obj_map == b.obj_map && a.mor_map == b.mor_map;
  }
};

/// Lexicographic order on (obj_map, mor_map) — the canonical enumeration
/// order used everywhere.
bool functor_less(const FinFunctor& a, const FinFunctor& b);

struct FunctorCheck {
  std::optional<FinFunctor> functor;  // engaged exactly when report is empty
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Certifies an index-level candidate: typing of every morphism image,
/// preservation of identities, and preservation of all composites.
FunctorCheck check_functor(const FinCat& source, const FinCat& target,
                           std::vector<int> obj_map, std::vector<int> mor_map);

/// Same, but from id-level maps (as read from a functor file). Identity
/// morphisms may be omitted from mor_map; when present they must agree with
/// the forced value.
FunctorCheck check_functor_ids(const FinCat& source, const FinCat& target,
                               const std::map<std::string, std::string>& obj_map,
                               const std::map<std::string, std::string>& mor_map);

FinFunctor identity_functor(const FinCat& c);

/// Diagrammatic composite "F then G"; requires F.target == G.source (same
/// instance). The result is re-certified; failure indicates an internal bug.
FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g);

struct FunctorFlags {
  bool faithful = false;
  bool full = false;
  bool essentially_surjective = false;
  bool equivalence = false;
  bool isomorphism = false;
};

FunctorFlags classify_functor(const FinFunctor& f);

/// Components of a natural transformation between two parallel functors,
/// stored per source object as target-morphism indices. Meaningful only
/// relative to the (from, to) pair supplied at check time.
using NatComponents = std::vector<int>;

struct NatTransCheck {
  bool ok = false;
  bool all_components_iso = false;
  std::vector<Violation> violations;
};

/// Verifies component typing (comp_A: F(A) -> G(A)) and every naturality
/// square: for f: A->B, F(f) then comp_B = comp_A then G(f).
NatTransCheck check_nat_trans(const FinFunctor& from, const FinFunctor& to,
                              const NatComponents& components);

}  // namespace fincat

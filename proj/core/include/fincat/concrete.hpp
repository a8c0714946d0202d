#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fincat/enumerate.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// Thrown when an input exceeds a configured combinatorial cap (underlying
/// set size, monoid order, generated morphism count). Distinct from both
/// "no result" and invalid input.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultSizeCap = 6;     // underlying-set elements
inline constexpr int kDefaultMonoidCap = 12;  // monoid order for iso search

/// Underlying-set structure over a validated category: per-object element
/// labels and per-morphism total maps. Together with the FinCat this is a
/// concrete category; the projection onto sets is required to be faithful.
struct ConcreteData {
  // Per object: element labels in input order, unique within the object.
  std::vector<std::vector<std::string>> labels;
  // Per morphism (identities included): image position in cod's label list
  // for each dom label position.
  std::vector<std::vector<int>> mor_fn;
};

struct ConcreteFinCat {
  FinCat cat;
  ConcreteData data;
};

struct ConcreteValidation {
  std::optional<ConcreteData> data;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the underlying block against the category: total coverage, label
/// uniqueness, identity maps on identities, function composition matching
/// the composition table, and faithfulness (distinct parallel morphisms
/// carry distinct maps).
ConcreteValidation validate_concrete(
    const FinCat& cat, const std::map<std::string, std::vector<std::string>>& underlying,
    const std::map<std::string, std::map<std::string, std::string>>& mor_fn);

/// Underlying label sets compared bit-exactly (as sets, order-insensitive).
bool same_label_set(const ConcreteFinCat& k, int obj_a, int obj_b);

/// Structure-transport condition: for every pair (A,B) of objects with
/// equally sized underlying sets and every bijection u between them, exactly
/// one object C with Q(C) = Q(A) admits an isomorphism C -> B lifting u.
struct StarFailure {
  int obj_a = -1;
  int obj_b = -1;
  std::vector<int> bijection;  // label position in Q(A) -> position in Q(B)
  int matching_objects = 0;    // how many C qualified (0 or >= 2)
};

struct StarCheckResult {
  bool holds = false;
  std::optional<StarFailure> failure;
};

StarCheckResult check_star_condition(const ConcreteFinCat& k,
                                     int size_cap = kDefaultSizeCap);

/// A representation of the underlying-set projection: natural bijections
/// g_A from the labels of A onto Hom(W, A).
struct Representation {
  int witness = -1;  // the object W
  // Per object A: morphism index of g_A(x) for each label position x.
  std::vector<std::vector<int>> g;
};

/// Exhaustive search for a representation at the given witness object;
/// returns the first family in canonical order or nothing when none exists.
std::optional<Representation> find_representation(const ConcreteFinCat& k, int witness,
                                                  int size_cap = kDefaultSizeCap);

/// The bijection family u_A = g_A, then the hom-set action of pi, then the
/// inverse of h at pi(A). Requires pi to be an autoequivalence with
/// witness(g) isomorphic to pi(witness(g)) and h a representation at that
/// image. Every transport square is verified; failure is an internal bug.
std::vector<std::vector<int>> transport_bijections(const ConcreteFinCat& k,
                                                   const FinFunctor& pi,
                                                   const Representation& g,
                                                   const Representation& h);

struct TransportedAutomorphism {
  FinFunctor functor;
  std::vector<int> u_star;  // per object: the isomorphism F(A) -> pi(A)
};

struct TransportOutcome {
  std::optional<TransportedAutomorphism> automorphism;
  std::vector<Violation> violations;  // commuting-square or uniqueness failures
  bool ok() const { return violations.empty(); }
};

/// Builds the automorphism isomorphic to pi by transporting each object
/// along u_A: the image of A is the unique object C with Q(C) = Q(A)
/// admitting an isomorphism onto pi(A) that lifts u_A, and the image of
/// f: A -> B is u*_A then pi(f) then the inverse of u*_B. The result is
/// certified as a functor, checked to be an isomorphism of categories, and
/// checked to be naturally isomorphic to pi via the u* family — all
/// asserted, never assumed.
TransportOutcome build_transported_automorphism(const ConcreteFinCat& k,
                                                const FinFunctor& pi,
                                                const std::vector<std::vector<int>>& u);

/// Hom(A, A) with the induced composition.
struct FinMonoid {
  std::vector<int> elements;  // morphism indices, input order
  std::vector<int> table;     // dense: position * size + position -> position
  int identity = -1;          // position of the identity

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int x, int y) const { return table[x * size() + y]; }
};

FinMonoid end_monoid(const FinCat& c, int obj);

/// Identity-preserving table-respecting bijection search; the witness maps
/// positions of m1 to positions of m2. Throws CapExceeded above the cap.
std::optional<std::vector<int>> monoids_isomorphic(const FinMonoid& m1,
                                                   const FinMonoid& m2,
                                                   int cap = kDefaultMonoidCap);

}  // namespace fincat

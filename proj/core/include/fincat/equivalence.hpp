#pragma once

#include <optional>
#include <vector>

#include "fincat/enumerate.hpp"
#include "fincat/functor.hpp"
#include "fincat/skeleton.hpp"

namespace fincat {

/// A class-size mismatch (X in the source, Y = pi(X) in the target)
/// witnessing that an equivalence cannot be promoted to an isomorphism.
struct Obstruction {
  int x_obj = -1;  // object of the source
  int y_obj = -1;  // its image in the target
  int x_class_size = 0;
  int y_class_size = 0;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// The promotion criterion: pi promotes iff for every object X the class of
/// X and the class of pi(X) have equal cardinality. Returns every mismatch
/// in source input order (empty = criterion passes). Throws
/// std::invalid_argument when pi is not an equivalence.
std::vector<Obstruction> fiber_criterion(const FinFunctor& pi);

/// Constructive promotion of an equivalence pi: C -> D to an isomorphism.
///
/// Follows the retraction proof: with alpha = pi then nu(D), each fiber of
/// alpha over a skeleton object Y is matched bijectively with the class [Y]
/// (objects already hit by pi keep their pi-image when unclaimed, the rest
/// are matched order-preservingly in input order); phi(f) is the unique
/// morphism making the square with u_{phi(A)}, alpha(f), u_{phi(B)}
/// commute; tau_A = u_{phi(A)} then u_{pi(A)}^{-1} is a natural
/// isomorphism phi => pi. The returned phi is verified to be an isomorphism
/// of categories and tau to be a natural isomorphism — a failure there is
/// an internal bug and throws std::logic_error.
struct PromotionResult {
  enum class Outcome { kPromoted, kObstructed };
  Outcome outcome = Outcome::kObstructed;
  std::optional<FinFunctor> phi;  // engaged when promoted
  NatComponents tau;              // phi => pi, engaged when promoted
  std::vector<Obstruction> obstructions;

  bool promoted() const { return outcome == Outcome::kPromoted; }
};

PromotionResult promote_to_isomorphism(const FinFunctor& pi);

/// Lift of a skeleton automorphism with its properness verdict: the lifted
/// endofunctor is a proper autoequivalence exactly when the promotion
/// criterion fails on it.
struct SkeletonAutWitness {
  FinFunctor functor;  // psi composed after the retraction, on the base
  bool proper = false;
  std::vector<Obstruction> obstructions;
};

SkeletonAutWitness proper_witness_from_skeleton_aut(const SkeletonData& s,
                                                    const FinFunctor& psi);

enum class ProperMode { kCriterion, kOracle, kBoth };
enum class ProperVerdict { kProper, kNoProper };

struct ProperResult {
  ProperVerdict verdict = ProperVerdict::kNoProper;
  std::optional<FinFunctor> witness;  // a proper autoequivalence, when proper
  std::vector<Obstruction> witness_obstructions;
  std::optional<ProperVerdict> criterion_verdict;
  std::optional<ProperVerdict> oracle_verdict;
  bool modes_agree = true;  // meaningful when both modes ran
};

/// Decides whether C has a proper autoequivalence.
///
/// Criterion mode enumerates the automorphisms of the skeleton and looks
/// for one moving some object to a class of different cardinality; its
/// witness is that automorphism composed after the retraction. Oracle mode
/// enumerates all autoequivalences and all automorphisms of C and searches
/// for an autoequivalence naturally isomorphic to no automorphism. Both
/// mode runs the two and reports disagreement as a first-class finding
/// (modes_agree = false) instead of failing.
ProperResult has_proper_autoequivalence(const FinCat& c, ProperMode mode, Budget& budget,
                                        const EnumerationOptions& opts = {});

/// True iff all isomorphism classes of C have the same cardinality — a
/// sufficient condition for "no proper autoequivalence".
bool uniform_class_check(const FinCat& c);

}  // namespace fincat

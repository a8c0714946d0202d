#pragma once

#include <vector>

#include "fincat/functor.hpp"

namespace fincat {

/// Skeleton of a finite category: one representative per isomorphism class
/// (the member with the smallest input index), a chosen isomorphism
/// u_A: A -> rep(A) for every object (the first one in morphism input
/// order; the identity when A is its own representative), the full
/// subcategory on the representatives, and the retraction endofunctor nu
/// sending f: A -> B to u_A^{-1} then f then u_B.
///
/// Functors built over sk_cat hold a pointer to it, so keep the
/// SkeletonData in place while such functors are alive.
struct SkeletonData {
  const FinCat* base = nullptr;
  std::vector<int> representatives;  // per class: base object index
  std::vector<int> u;                // per base object: morphism A -> rep(A)
  FinCat sk_cat;
  FinFunctor nu;                    // endofunctor of base, image inside sk_cat
  std::vector<int> sk_obj_of_base;  // base object -> sk object, -1 off-skeleton
  std::vector<int> base_obj_of_sk;  // sk object -> base object
  std::vector<int> sk_mor_of_base;  // base morphism -> sk morphism, -1 off
  std::vector<int> base_mor_of_sk;  // sk morphism -> base morphism
};

SkeletonData compute_skeleton(const FinCat& c);

/// Certifies that nu is an inner autoequivalence: nu classifies as an
/// equivalence and the chosen u family is a natural isomorphism from the
/// identity functor to nu. Returns the witness components (u itself).
/// A failure is an internal bug and throws std::logic_error.
NatComponents verify_nu_inner(const SkeletonData& s);

/// Lifts an automorphism psi of sk_cat to the endofunctor psi-after-nu of
/// the base category. Throws std::invalid_argument when psi is not an
/// automorphism of this skeleton's sk_cat.
FinFunctor lift_skeleton_automorphism(const SkeletonData& s, const FinFunctor& psi);

}  // namespace fincat

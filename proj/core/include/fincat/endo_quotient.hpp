#pragma once

#include <vector>

#include "fincat/concrete.hpp"  // CapExceeded
#include "fincat/enumerate.hpp"
#include "fincat/equivalence.hpp"
#include "fincat/functor.hpp"

namespace fincat {

/// Hard guard for the quotient computation, which enumerates every
/// endofunctor and composes all pairs. Exceeding either bound throws
/// CapExceeded before any search starts.
struct EndoQuotientCaps {
  int max_objects = 5;
  int max_morphisms = 16;
};

/// The monoid of endofunctors up to natural isomorphism, with its group of
/// invertible elements and the image of the genuine automorphisms.
struct EndoMonoidQuotient {
  std::vector<FinFunctor> endofunctors;  // every endofunctor, canonical order
  std::vector<int> class_of;             // endofunctor index -> class index
  std::vector<std::vector<int>> classes;  // ordered by least member
  std::vector<int> mult;                  // dense class x class -> class
  int identity_class = -1;
  std::vector<int> invertible_classes;  // ascending class indices
  std::vector<int> aut_image;           // classes containing an automorphism
  bool eta_star_surjective = false;     // aut_image == invertible_classes

  int class_count() const { return static_cast<int>(classes.size()); }
  int mul(int a, int b) const { return mult[a * classes.size() + b]; }
};

/// Computes the quotient. Representatives are each class's least member in
/// the canonical enumeration order. Multiplication is computed on
/// representatives and asserted well-defined over every member pair; a
/// violation there is an internal bug and throws std::logic_error.
EndoMonoidQuotient endo_quotient(const FinCat& c, Budget& budget,
                                 const EnumerationOptions& opts = {},
                                 const EndoQuotientCaps& caps = {});

/// Cross-check of the two views of rigidity: the canonical map from the
/// automorphism group onto the invertible classes is surjective exactly
/// when the category has no proper autoequivalence.
struct EtaAgreement {
  bool eta_surjective = false;
  ProperVerdict verdict = ProperVerdict::kNoProper;
  bool proper_modes_agree = true;  // criterion vs oracle inside the verdict
  bool agree = false;              // eta_surjective == (verdict is no-proper)
};

EtaAgreement verify_eta_iff_no_proper(const FinCat& c, Budget& budget,
                                      const EnumerationOptions& opts = {},
                                      const EndoQuotientCaps& caps = {});

}  // namespace fincat

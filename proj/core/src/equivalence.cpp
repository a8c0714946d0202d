#include "fincat/equivalence.hpp"

#include <stdexcept>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

namespace {

// Class-size mismatches of an already-certified equivalence, source input
// order.
std::vector<Obstruction> collect_obstructions(const FinFunctor& pi) {
  const FinCat& c = *pi.source;
  const FinCat& d = *pi.target;
  std::vector<Obstruction> out;
  for (int x = 0; x < c.object_count(); ++x) {
    const int y = pi.obj(x);
    const int sx = c.class_size_of(x);
    const int sy = d.class_size_of(y);
    if (sx != sy) out.push_back({x, y, sx, sy});
  }
  return out;
}

}  // namespace

std::vector<Obstruction> fiber_criterion(const FinFunctor& pi) {
  if (!classify_functor(pi).equivalence)
    throw std::invalid_argument("fiber_criterion: functor is not an equivalence");
  return collect_obstructions(pi);
}

PromotionResult promote_to_isomorphism(const FinFunctor& pi) {
  if (!classify_functor(pi).equivalence)
    throw std::invalid_argument("promote_to_isomorphism: functor is not an equivalence");

  PromotionResult result;
  result.obstructions = collect_obstructions(pi);
  if (!result.obstructions.empty()) {
    result.outcome = PromotionResult::Outcome::kObstructed;
    return result;
  }

  const FinCat& c = *pi.source;
  const FinCat& d = *pi.target;
  const SkeletonData sd = compute_skeleton(d);
  const FinFunctor alpha = compose_functors(pi, sd.nu);

  // Object part: match each fiber of alpha with the class it lands in.
  // Objects keep their pi-image when still unclaimed; the rest are paired
  // order-preservingly with the unclaimed remainder of the class.
  std::vector<int> phi_obj(c.object_count(), -1);
  std::vector<char> claimed(d.object_count(), 0);
  const auto& d_classes = d.iso_classes().classes;
  for (size_t k = 0; k < d_classes.size(); ++k) {
    const int rep = sd.representatives[k];
    std::vector<int> fiber;
    for (int x = 0; x < c.object_count(); ++x)
      if (alpha.obj(x) == rep) fiber.push_back(x);
    if (fiber.size() != d_classes[k].size())
      throw std::logic_error("promote_to_isomorphism: fiber/class size mismatch");
    for (int x : fiber) {
      const int y = pi.obj(x);
      if (!claimed[y]) {
        phi_obj[x] = y;
        claimed[y] = 1;
      }
    }
    size_t next = 0;
    for (int x : fiber) {
      if (phi_obj[x] >= 0) continue;
      while (next < d_classes[k].size() && claimed[d_classes[k][next]]) ++next;
      phi_obj[x] = d_classes[k][next];
      claimed[d_classes[k][next]] = 1;
    }
  }

  // Morphism part: phi(f) = u_{phi(A)} then alpha(f) then u_{phi(B)}^{-1}.
  std::vector<int> phi_mor(c.morphism_count(), -1);
  for (int i = 0; i < c.morphism_count(); ++i) {
    const auto& m = c.morphism(i);
    const int head = d.compose(sd.u[phi_obj[m.dom]], alpha.mor(i));
    const int whole = head < 0 ? -1 : d.compose(head, d.inverse_of(sd.u[phi_obj[m.cod]]));
    if (whole < 0) throw std::logic_error("promote_to_isomorphism: conjugation not composable");
    phi_mor[i] = whole;
  }

  FunctorCheck fc = check_functor(c, d, phi_obj, phi_mor);
  if (!fc.ok()) throw std::logic_error("promote_to_isomorphism: constructed map is not a functor");
  if (!classify_functor(*fc.functor).isomorphism)
    throw std::logic_error("promote_to_isomorphism: constructed functor is not an isomorphism");

  NatComponents tau(c.object_count(), -1);
  for (int x = 0; x < c.object_count(); ++x)
    tau[x] = d.compose(sd.u[phi_obj[x]], d.inverse_of(sd.u[pi.obj(x)]));
  const NatTransCheck ntc = check_nat_trans(*fc.functor, pi, tau);
  if (!ntc.ok || !ntc.all_components_iso)
    throw std::logic_error("promote_to_isomorphism: tau is not a natural isomorphism");

  result.outcome = PromotionResult::Outcome::kPromoted;
  result.phi = std::move(fc.functor);
  result.tau = std::move(tau);
  return result;
}

SkeletonAutWitness proper_witness_from_skeleton_aut(const SkeletonData& s,
                                                    const FinFunctor& psi) {
  SkeletonAutWitness w;
  w.functor = lift_skeleton_automorphism(s, psi);
  w.obstructions = collect_obstructions(w.functor);
  w.proper = !w.obstructions.empty();
  return w;
}

namespace {

ProperResult run_criterion(const FinCat& c, Budget& budget, const EnumerationOptions& opts) {
  ProperResult r;
  const SkeletonData s = compute_skeleton(c);
  for (const FinFunctor& psi : enumerate_automorphisms(s.sk_cat, budget, opts)) {
    SkeletonAutWitness w = proper_witness_from_skeleton_aut(s, psi);
    if (w.proper) {
      r.verdict = ProperVerdict::kProper;
      r.witness = std::move(w.functor);
      r.witness_obstructions = std::move(w.obstructions);
      return r;
    }
  }
  r.verdict = ProperVerdict::kNoProper;
  return r;
}

ProperResult run_oracle(const FinCat& c, Budget& budget, const EnumerationOptions& opts) {
  ProperResult r;
  const std::vector<FinFunctor> eqs = enumerate_autoequivalences(c, budget, opts);
  const std::vector<FinFunctor> autos = enumerate_automorphisms(c, budget, opts);
  for (const FinFunctor& f : eqs) {
    bool matched = false;
    for (const FinFunctor& g : autos) {
      if (are_naturally_isomorphic(f, g, budget)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      r.verdict = ProperVerdict::kProper;
      r.witness = f;
      r.witness_obstructions = collect_obstructions(f);
      return r;
    }
  }
  r.verdict = ProperVerdict::kNoProper;
  return r;
}

}  // namespace

ProperResult has_proper_autoequivalence(const FinCat& c, ProperMode mode, Budget& budget,
                                        const EnumerationOptions& opts) {
  if (mode == ProperMode::kCriterion) {
    ProperResult r = run_criterion(c, budget, opts);
    r.criterion_verdict = r.verdict;
    return r;
  }
  if (mode == ProperMode::kOracle) {
    ProperResult r = run_oracle(c, budget, opts);
    r.oracle_verdict = r.verdict;
    return r;
  }
  ProperResult crit = run_criterion(c, budget, opts);
  const ProperResult orac = run_oracle(c, budget, opts);
  crit.criterion_verdict = crit.verdict;
  crit.oracle_verdict = orac.verdict;
  crit.modes_agree = crit.verdict == orac.verdict;
  if (crit.verdict != ProperVerdict::kProper && orac.verdict == ProperVerdict::kProper) {
    crit.witness = orac.witness;
    crit.witness_obstructions = orac.witness_obstructions;
  }
  return crit;
}

bool uniform_class_check(const FinCat& c) {
  const auto& classes = c.iso_classes().classes;
  for (size_t k = 1; k < classes.size(); ++k)
    if (classes[k].size() != classes[0].size()) return false;
  return true;
}

}  // namespace fincat

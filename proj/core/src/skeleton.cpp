#include "fincat/skeleton.hpp"

#include <stdexcept>

namespace fincat {

SkeletonData compute_skeleton(const FinCat& c) {
  SkeletonData s;
  s.base = &c;

  const auto& classes = c.iso_classes();
  for (const auto& cls : classes.classes) s.representatives.push_back(cls[0]);

  s.u.resize(c.object_count(), -1);
  for (int o = 0; o < c.object_count(); ++o) {
    const int rep = s.representatives[classes.class_of[o]];
    if (o == rep) {
      s.u[o] = c.identity_of(o);
      continue;
    }
    for (int mor : c.hom(o, rep)) {
      if (c.is_isomorphism(mor)) {
        s.u[o] = mor;
        break;
      }
    }
    if (s.u[o] < 0)
      throw std::logic_error("compute_skeleton: no isomorphism from '" +
                             c.object_id(o) + "' to its representative");
  }

  // Full subcategory on the representatives, sharing ids with the base.
  RawCategory raw;
  std::vector<bool> is_rep(c.object_count(), false);
  for (int rep : s.representatives) {
    is_rep[rep] = true;
    raw.objects.push_back(c.object_id(rep));
  }
  std::vector<int> sk_members;  // base morphism indices living in sk_cat
  for (int i = c.object_count(); i < c.morphism_count(); ++i) {
    const auto& mor = c.morphism(i);
    if (is_rep[mor.dom] && is_rep[mor.cod]) {
      raw.morphisms.push_back({mor.id, c.object_id(mor.dom), c.object_id(mor.cod)});
      sk_members.push_back(i);
    }
  }
  for (int f : sk_members)
    for (int g : sk_members) {
      const int h = c.compose(f, g);
      if (h < 0) continue;
      raw.compose.push_back({c.morphism(f).id, c.morphism(g).id, c.morphism(h).id});
    }
  auto validated = validate_category(raw);
  if (!validated.report.ok())
    throw std::logic_error("compute_skeleton: full subcategory failed validation: " +
                           validated.report.to_string());
  s.sk_cat = std::move(*validated.category);

  s.sk_obj_of_base.assign(c.object_count(), -1);
  s.base_obj_of_sk.resize(s.sk_cat.object_count());
  for (int k = 0; k < s.sk_cat.object_count(); ++k) {
    const int base_obj = c.find_object(s.sk_cat.object_id(k));
    s.base_obj_of_sk[k] = base_obj;
    s.sk_obj_of_base[base_obj] = k;
  }
  s.sk_mor_of_base.assign(c.morphism_count(), -1);
  s.base_mor_of_sk.resize(s.sk_cat.morphism_count());
  for (int k = 0; k < s.sk_cat.morphism_count(); ++k) {
    const int base_mor = c.find_morphism(s.sk_cat.morphism(k).id);
    s.base_mor_of_sk[k] = base_mor;
    s.sk_mor_of_base[base_mor] = k;
  }

  // The retraction: nu(A) = rep(A), nu(f) = u_A^{-1} then f then u_B.
  std::vector<int> obj_map(c.object_count());
  std::vector<int> mor_map(c.morphism_count());
  for (int o = 0; o < c.object_count(); ++o)
    obj_map[o] = s.representatives[classes.class_of[o]];
  for (int i = 0; i < c.morphism_count(); ++i) {
    const auto& mor = c.morphism(i);
    mor_map[i] = c.compose(c.compose(c.inverse_of(s.u[mor.dom]), i), s.u[mor.cod]);
  }
  auto checked = check_functor(c, c, std::move(obj_map), std::move(mor_map));
  if (!checked.ok())
    throw std::logic_error("compute_skeleton: retraction failed certification: " +
                           checked.violations.front().detail);
  s.nu = *checked.functor;
  return s;
}

NatComponents verify_nu_inner(const SkeletonData& s) {
  const FinCat& c = *s.base;
  if (!classify_functor(s.nu).equivalence)
    throw std::logic_error("verify_nu_inner: retraction is not an equivalence");
  FinFunctor id = identity_functor(c);
  auto check = check_nat_trans(id, s.nu, s.u);
  if (!check.ok || !check.all_components_iso)
    throw std::logic_error(
        "verify_nu_inner: chosen isomorphism family is not a natural isomorphism" +
        (check.violations.empty() ? std::string{}
                                  : ": " + check.violations.front().detail));
  return s.u;
}

FinFunctor lift_skeleton_automorphism(const SkeletonData& s, const FinFunctor& psi) {
  if (psi.source != &s.sk_cat || psi.target != &s.sk_cat)
    throw std::invalid_argument("lift_skeleton_automorphism: functor is not over sk_cat");
  if (!classify_functor(psi).isomorphism)
    throw std::invalid_argument(
        "lift_skeleton_automorphism: functor is not an automorphism of sk_cat");

  const FinCat& c = *s.base;
  std::vector<int> obj_map(c.object_count());
  std::vector<int> mor_map(c.morphism_count());
  for (int o = 0; o < c.object_count(); ++o)
    obj_map[o] = s.base_obj_of_sk[psi.obj(s.sk_obj_of_base[s.nu.obj(o)])];
  for (int i = 0; i < c.morphism_count(); ++i)
    mor_map[i] = s.base_mor_of_sk[psi.mor(s.sk_mor_of_base[s.nu.mor(i)])];
  auto checked = check_functor(c, c, std::move(obj_map), std::move(mor_map));
  if (!checked.ok())
    throw std::logic_error("lift_skeleton_automorphism: lift failed certification: " +
                           checked.violations.front().detail);
  return *checked.functor;
}

}  // namespace fincat

#include "fincat/functor.hpp"

#include <stdexcept>

namespace fincat {

bool functor_less(const FinFunctor& a, const FinFunctor& b) {
  if (a.obj_map != b.obj_map) return a.obj_map < b.obj_map;
  return a.mor_map < b.mor_map;
}

FunctorCheck check_functor(const FinCat& source, const FinCat& target,
                           std::vector<int> obj_map, std::vector<int> mor_map) {
  FunctorCheck out;
  auto flag = [&](std::string law, std::string detail) {
    out.violations.push_back({std::move(law), std::move(detail)});
  };

  const int n = source.object_count();
  const int m = source.morphism_count();
  if (static_cast<int>(obj_map.size()) != n || static_cast<int>(mor_map.size()) != m) {
    flag("arity", "object or morphism map does not cover the source");
    return out;
  }
  for (int o = 0; o < n; ++o)
    if (obj_map[o] < 0 || obj_map[o] >= target.object_count()) {
      flag("dangling-ref", "object '" + source.object_id(o) + "' maps outside the target");
      return out;
    }
  for (int i = 0; i < m; ++i)
    if (mor_map[i] < 0 || mor_map[i] >= target.morphism_count()) {
      flag("dangling-ref", "morphism '" + source.morphism(i).id + "' maps outside the target");
      return out;
    }

  for (int i = 0; i < m; ++i) {
    const auto& f = source.morphism(i);
    const auto& im = target.morphism(mor_map[i]);
    if (im.dom != obj_map[f.dom] || im.cod != obj_map[f.cod])
      flag("typing", "image of '" + f.id + "' has wrong endpoints");
  }
  for (int o = 0; o < n; ++o)
    if (mor_map[source.identity_of(o)] != target.identity_of(obj_map[o]))
      flag("identity", "identity of '" + source.object_id(o) + "' not sent to an identity");
  if (!out.ok()) return out;

  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      const int fg = source.compose(f, g);
      if (fg < 0) continue;
      if (target.compose(mor_map[f], mor_map[g]) != mor_map[fg])
        flag("composition", "(" + source.morphism(f).id + ", " + source.morphism(g).id +
                                ") is not preserved");
    }
  }
  if (!out.ok()) return out;

  out.functor = FinFunctor{&source, &target, std::move(obj_map), std::move(mor_map)};
  return out;
}

FunctorCheck check_functor_ids(const FinCat& source, const FinCat& target,
                               const std::map<std::string, std::string>& obj_map,
                               const std::map<std::string, std::string>& mor_map) {
  FunctorCheck out;
  auto flag = [&](std::string law, std::string detail) {
    out.violations.push_back({std::move(law), std::move(detail)});
  };

  std::vector<int> objs(source.object_count(), -1);
  for (int o = 0; o < source.object_count(); ++o) {
    auto it = obj_map.find(source.object_id(o));
    if (it == obj_map.end()) {
      flag("missing-map", "no image for object '" + source.object_id(o) + "'");
      continue;
    }
    objs[o] = target.find_object(it->second);
    if (objs[o] < 0)
      flag("dangling-ref", "object image '" + it->second + "' is not in the target");
  }
  for (const auto& [key, value] : obj_map)
    if (source.find_object(key) < 0)
      flag("dangling-ref", "object map mentions unknown object '" + key + "'");
  if (!out.ok()) return out;

  std::vector<int> mors(source.morphism_count(), -1);
  for (int i = 0; i < source.morphism_count(); ++i) {
    const auto& mor = source.morphism(i);
    auto it = mor_map.find(mor.id);
    if (it == mor_map.end()) {
      if (source.is_identity(i)) {
        mors[i] = target.identity_of(objs[mor.dom]);  // forced
        continue;
      }
      flag("missing-map", "no image for morphism '" + mor.id + "'");
      continue;
    }
    mors[i] = target.find_morphism(it->second);
    if (mors[i] < 0)
      flag("dangling-ref", "morphism image '" + it->second + "' is not in the target");
  }
  for (const auto& [key, value] : mor_map)
    if (source.find_morphism(key) < 0)
      flag("dangling-ref", "morphism map mentions unknown morphism '" + key + "'");
  if (!out.ok()) return out;

  return check_functor(source, target, std::move(objs), std::move(mors));
}

FinFunctor identity_functor(const FinCat& c) {
  FinFunctor f;
  f.source = &c;
  f.target = &c;
  f.obj_map.resize(c.object_count());
  f.mor_map.resize(c.morphism_count());
  for (int o = 0; o < c.object_count(); ++o) f.obj_map[o] = o;
  for (int i = 0; i < c.morphism_count(); ++i) f.mor_map[i] = i;
  return f;
}

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g) {
  if (f.target != g.source)
    throw std::invalid_argument("compose_functors: target of first != source of second");
  std::vector<int> objs(f.obj_map.size());
  std::vector<int> mors(f.mor_map.size());
  for (size_t o = 0; o < objs.size(); ++o) objs[o] = g.obj_map[f.obj_map[o]];
  for (size_t i = 0; i < mors.size(); ++i) mors[i] = g.mor_map[f.mor_map[i]];
  auto checked = check_functor(*f.source, *g.target, std::move(objs), std::move(mors));
  if (!checked.ok())
    throw std::logic_error("compose_functors: composite failed certification: " +
                           checked.violations.front().detail);
  return *checked.functor;
}

FunctorFlags classify_functor(const FinFunctor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  FunctorFlags flags;

  // Faithful and full: per ordered object pair, the restriction of mor_map
  // to Hom(A,B) -> Hom(FA,FB) is injective / surjective.
  flags.faithful = true;
  flags.full = true;
  for (int a = 0; a < c.object_count() && (flags.faithful || flags.full); ++a) {
    for (int b = 0; b < c.object_count(); ++b) {
      const auto& dom_hom = c.hom(a, b);
      const auto& cod_hom = d.hom(f.obj(a), f.obj(b));
      std::vector<bool> hit(cod_hom.size(), false);
      bool injective = true;
      for (int mor : dom_hom) {
        int image = f.mor(mor);
        for (size_t k = 0; k < cod_hom.size(); ++k) {
          if (cod_hom[k] == image) {
            if (hit[k]) injective = false;
            hit[k] = true;
            break;
          }
        }
      }
      if (!injective) flags.faithful = false;
      for (bool h : hit)
        if (!h) {
          flags.full = false;
          break;
        }
      if (cod_hom.size() > dom_hom.size()) flags.full = false;
    }
  }

  // Essentially surjective: the image objects cover every target iso-class.
  const auto& classes = d.iso_classes();
  std::vector<bool> covered(classes.classes.size(), false);
  for (int o = 0; o < c.object_count(); ++o) covered[classes.class_of[f.obj(o)]] = true;
  flags.essentially_surjective = true;
  for (bool v : covered)
    if (!v) flags.essentially_surjective = false;
  if (c.object_count() == 0 && d.object_count() > 0) flags.essentially_surjective = false;

  flags.equivalence = flags.faithful && flags.full && flags.essentially_surjective;

  if (c.object_count() == d.object_count() && c.morphism_count() == d.morphism_count()) {
    std::vector<bool> obj_hit(d.object_count(), false);
    std::vector<bool> mor_hit(d.morphism_count(), false);
    for (int o : f.obj_map) obj_hit[o] = true;
    for (int i : f.mor_map) mor_hit[i] = true;
    flags.isomorphism = true;
    for (bool v : obj_hit)
      if (!v) flags.isomorphism = false;
    for (bool v : mor_hit)
      if (!v) flags.isomorphism = false;
  }
  return flags;
}

NatTransCheck check_nat_trans(const FinFunctor& from, const FinFunctor& to,
                              const NatComponents& components) {
  NatTransCheck out;
  auto flag = [&](std::string law, std::string detail) {
    out.violations.push_back({std::move(law), std::move(detail)});
  };
  if (from.source != to.source || from.target != to.target) {
    flag("parallel", "functors are not parallel");
    return out;
  }
  const FinCat& c = *from.source;
  const FinCat& d = *from.target;
  if (static_cast<int>(components.size()) != c.object_count()) {
    flag("arity", "component family does not cover the source objects");
    return out;
  }
  for (int o = 0; o < c.object_count(); ++o) {
    int comp = components[o];
    if (comp < 0 || comp >= d.morphism_count()) {
      flag("dangling-ref", "component at '" + c.object_id(o) + "' is not in the target");
      return out;
    }
    const auto& mor = d.morphism(comp);
    if (mor.dom != from.obj(o) || mor.cod != to.obj(o))
      flag("typing", "component at '" + c.object_id(o) + "' has wrong endpoints");
  }
  if (!out.violations.empty()) return out;

  for (int i = 0; i < c.morphism_count(); ++i) {
    const auto& f = c.morphism(i);
    if (d.compose(from.mor(i), components[f.cod]) !=
        d.compose(components[f.dom], to.mor(i)))
      flag("naturality", "square at '" + f.id + "' does not commute");
  }
  out.ok = out.violations.empty();
  if (out.ok) {
    out.all_components_iso = true;
    for (int comp : components)
      if (!d.is_isomorphism(comp)) out.all_components_iso = false;
  }
  return out;
}

}  // namespace fincat

#include "fincat/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fincat/builders.hpp"
#include "fincat/category.hpp"
#include "fincat/concrete.hpp"
#include "fincat/endo_quotient.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/equivalence.hpp"
#include "fincat/functor.hpp"
#include "fincat/json_io.hpp"
#include "fincat/preorders.hpp"
#include "fincat/skeleton.hpp"

namespace fincat {
namespace {

struct CorpusItem {
  std::string name;
  FinCat cat;
  std::optional<ConcreteData> concrete;
};

std::vector<CorpusItem> build_corpus() {
  std::vector<CorpusItem> out;
  for (const char* name : {"discrete:1", "discrete:2", "discrete:3", "isopair",
                           "p4", "e3", "finset:1,2,2"}) {
    CatalogResult r = catalog(name);
    if (!r.entry) throw std::logic_error("corpus entry failed to build: " + std::string(name));
    out.push_back({name, std::move(r.entry->cat), std::move(r.entry->concrete)});
  }
  // Two disjoint isomorphic pairs: every class has size two.
  PreorderResult two = from_preorder(
      {"x1", "y1", "x2", "y2"},
      {{"x1", "y1"}, {"y1", "x1"}, {"x2", "y2"}, {"y2", "x2"}}, true);
  if (!two.category) throw std::logic_error("corpus entry failed to build: iso2x2");
  out.push_back({"iso2x2", std::move(*two.category), std::nullopt});
  return out;
}

struct Runner {
  SuiteScope scope;
  SuiteOptions opts;
  std::vector<CorpusItem> corpus = build_corpus();
  std::vector<SuiteCase> cases;
  long long nodes = 0;

  EnumerationOptions eopts() const { return EnumerationOptions{opts.workers}; }

  const CorpusItem& item(const std::string& name) const {
    for (const auto& it : corpus)
      if (it.name == name) return it;
    throw std::logic_error("corpus item missing: " + name);
  }

  void add(int criterion, const std::string& name,
           const std::function<std::string(Budget&)>& body) {
    Budget budget(opts.budget);
    SuiteCase c;
    c.criterion = criterion;
    c.name = name;
    try {
      c.detail = body(budget);
      c.passed = c.detail.empty();
    } catch (const BudgetExceeded&) {
      c.detail = "search budget exceeded";
    } catch (const CapExceeded& e) {
      c.detail = std::string("cap exceeded: ") + e.what();
    } catch (const std::exception& e) {
      c.detail = std::string("error: ") + e.what();
    }
    nodes += budget.used();
    cases.push_back(std::move(c));
  }
};

std::string obstruction_str(const FinCat& s, const FinCat& t, const Obstruction& o) {
  return "(" + s.object_id(o.x_obj) + "," + t.object_id(o.y_obj) + "," +
         std::to_string(o.x_class_size) + "," + std::to_string(o.y_class_size) + ")";
}

std::string obstruction_list_str(const FinCat& s, const FinCat& t,
                                 const std::vector<Obstruction>& obs) {
  std::string out = "[";
  for (size_t i = 0; i < obs.size(); ++i) {
    if (i) out += " ";
    out += obstruction_str(s, t, obs[i]);
  }
  return out + "]";
}

std::string make_functor(const FinCat& src, const FinCat& dst,
                         const std::map<std::string, std::string>& obj_map,
                         const std::map<std::string, std::string>& mor_map,
                         FinFunctor& out) {
  FunctorCheck fc = check_functor_ids(src, dst, obj_map, mor_map);
  if (!fc.ok())
    return "functor rejected: " + fc.violations.front().law + " " +
           fc.violations.front().detail;
  out = *fc.functor;
  return "";
}

// The exchange endofunctor of e3 used by several cases: swap the isomorphic
// pair's representative with the isolated object.
std::string e3_exchange(const FinCat& c, FinFunctor& out) {
  return make_functor(c, c, {{"e", "f"}, {"f", "e"}, {"a", "f"}},
                      {{"e->a", "id:f"}, {"a->e", "id:f"}}, out);
}

// ---- criterion 1: the retraction onto the skeleton is inner ----

void cases_retraction(Runner& r) {
  for (const auto& item : r.corpus) {
    r.add(1, "retraction-inner " + item.name, [&](Budget&) -> std::string {
      SkeletonData s = compute_skeleton(item.cat);
      NatComponents w = verify_nu_inner(s);
      if (w != s.u) return "certified witness differs from the chosen u family";
      NatTransCheck ntc = check_nat_trans(identity_functor(item.cat), s.nu, s.u);
      if (!ntc.ok) return "u family is not natural";
      if (!ntc.all_components_iso) return "u family has a non-invertible component";
      if (!classify_functor(s.nu).equivalence)
        return "retraction does not classify as an equivalence";
      return "";
    });
  }
  if (r.scope != SuiteScope::kFast) {
    r.add(1, "retraction-inner preorders-3", [&](Budget&) -> std::string {
      std::vector<FinCat> ps = all_preorders_on_3();
      if (ps.size() != 29)
        return "expected 29 preorder categories on three elements, got " +
               std::to_string(ps.size());
      for (size_t i = 0; i < ps.size(); ++i) {
        SkeletonData s = compute_skeleton(ps[i]);
        verify_nu_inner(s);
        NatTransCheck ntc = check_nat_trans(identity_functor(ps[i]), s.nu, s.u);
        if (!ntc.ok || !ntc.all_components_iso)
          return "preorder " + std::to_string(i) + ": u family fails";
        if (!classify_functor(s.nu).equivalence)
          return "preorder " + std::to_string(i) + ": retraction not an equivalence";
      }
      return "";
    });
  }
}

// ---- criterion 2: the p4 swap lift is a certified proper witness ----

void cases_swap_witness(Runner& r) {
  r.add(2, "swap-witness p4", [&](Budget& budget) -> std::string {
    const FinCat& c = r.item("p4").cat;
    SkeletonData s = compute_skeleton(c);
    if (s.sk_cat.object_count() != 3)
      return "expected a 3-object skeleton, got " +
             std::to_string(s.sk_cat.object_count());
    FinFunctor psi;
    std::string err = make_functor(s.sk_cat, s.sk_cat,
                                   {{"a", "a"}, {"b", "c"}, {"c", "b"}},
                                   {{"a->b", "a->c"}, {"a->c", "a->b"}}, psi);
    if (!err.empty()) return err;
    SkeletonAutWitness w = proper_witness_from_skeleton_aut(s, psi);
    if (!w.proper) return "swap lift not flagged as proper";
    const std::vector<std::pair<std::string, std::string>> want = {
        {"a", "a"}, {"b", "c"}, {"c", "b"}, {"d", "b"}};
    for (const auto& xy : want)
      if (w.functor.obj(c.find_object(xy.first)) != c.find_object(xy.second))
        return "lift sends " + xy.first + " to " +
               c.object_id(w.functor.obj(c.find_object(xy.first))) + ", expected " +
               xy.second;
    if (!classify_functor(w.functor).equivalence) return "lift is not an equivalence";
    std::string got = obstruction_list_str(c, c, w.obstructions);
    if (w.obstructions.empty() ||
        obstruction_str(c, c, w.obstructions.front()) != "(b,c,1,2)")
      return "first obstruction wrong; list is " + got;
    if (got != "[(b,c,1,2) (c,b,2,1) (d,b,2,1)]")
      return "obstruction list is " + got;
    if (fiber_criterion(w.functor) != w.obstructions)
      return "criterion recomputation differs from the witness obstructions";
    ProperResult pr = has_proper_autoequivalence(c, ProperMode::kBoth, budget, r.eopts());
    if (pr.verdict != ProperVerdict::kProper) return "verdict is not proper";
    if (!pr.modes_agree) return "criterion and oracle disagree";
    return "";
  });
}

// ---- criterion 3: the e3 exchange is proper with the pinned obstruction ----

void cases_construction_witness(Runner& r) {
  r.add(3, "construction-witness e3", [&](Budget& budget) -> std::string {
    const FinCat& c = r.item("e3").cat;
    FinFunctor phi;
    std::string err = e3_exchange(c, phi);
    if (!err.empty()) return err;
    FunctorFlags fl = classify_functor(phi);
    if (!fl.equivalence) return "exchange endofunctor is not an equivalence";
    if (fl.isomorphism) return "exchange endofunctor must not be an isomorphism";
    std::vector<Obstruction> obs = fiber_criterion(phi);
    std::string got = obstruction_list_str(c, c, obs);
    if (obs.empty() || obstruction_str(c, c, obs.front()) != "(e,f,2,1)")
      return "first obstruction wrong; list is " + got;
    if (got != "[(e,f,2,1) (f,e,1,2) (a,f,2,1)]") return "obstruction list is " + got;
    if (promote_to_isomorphism(phi).promoted()) return "obstructed endofunctor promoted";
    ProperResult pr = has_proper_autoequivalence(c, ProperMode::kBoth, budget, r.eopts());
    if (pr.verdict != ProperVerdict::kProper) return "verdict is not proper";
    if (!pr.modes_agree) return "criterion and oracle disagree";
    // The skeleton route must reconstruct the very same endofunctor.
    SkeletonData s = compute_skeleton(c);
    FinFunctor psi;
    err = make_functor(s.sk_cat, s.sk_cat, {{"e", "f"}, {"f", "e"}}, {}, psi);
    if (!err.empty()) return err;
    SkeletonAutWitness w = proper_witness_from_skeleton_aut(s, psi);
    if (!w.proper) return "skeleton route does not flag the exchange";
    if (!(w.functor == phi)) return "skeleton route builds a different endofunctor";
    return "";
  });
}

// ---- criterion 4: promotion is sound on every promoted instance ----

void cases_promotion(Runner& r) {
  struct Expected {
    const char* name;
    int promoted;
    int obstructed;
  };
  const std::vector<Expected> table = {
      {"discrete:1", 1, 0}, {"discrete:2", 2, 0},   {"discrete:3", 6, 0},
      {"isopair", 4, 0},    {"p4", 4, 2},           {"e3", 4, 2},
      {"finset:1,2,2", 16, 0}, {"iso2x2", 32, 0}};
  for (const Expected& e : table) {
    r.add(4, std::string("promotion-soundness ") + e.name,
          [&](Budget& budget) -> std::string {
            const FinCat& c = r.item(e.name).cat;
            std::vector<FinFunctor> eqs = enumerate_autoequivalences(c, budget, r.eopts());
            int promoted = 0, obstructed = 0;
            for (const FinFunctor& pi : eqs) {
              PromotionResult pm = promote_to_isomorphism(pi);
              if (pm.promoted()) {
                ++promoted;
                if (!pm.phi) return "promoted without a functor";
                if (!classify_functor(*pm.phi).isomorphism)
                  return "promoted functor does not classify as an isomorphism";
                NatTransCheck ntc = check_nat_trans(*pm.phi, pi, pm.tau);
                if (!ntc.ok) return "tau is not natural";
                if (!ntc.all_components_iso) return "tau has a non-invertible component";
              } else {
                ++obstructed;
                if (pm.obstructions.empty()) return "obstructed without an obstruction";
                for (const Obstruction& o : pm.obstructions)
                  if (o.x_class_size == o.y_class_size)
                    return "obstruction with equal class sizes";
              }
            }
            if (promoted != e.promoted || obstructed != e.obstructed)
              return "promoted/obstructed = " + std::to_string(promoted) + "/" +
                     std::to_string(obstructed) + ", expected " +
                     std::to_string(e.promoted) + "/" + std::to_string(e.obstructed);
            return "";
          });
  }

  r.add(4, "promotion identity p4", [&](Budget&) -> std::string {
    const FinCat& c = r.item("p4").cat;
    FinFunctor id = identity_functor(c);
    PromotionResult pm = promote_to_isomorphism(id);
    if (!pm.promoted()) return "identity failed to promote";
    if (!(*pm.phi == id)) return "promotion of the identity is not the identity";
    for (int o = 0; o < c.object_count(); ++o)
      if (pm.tau[o] != c.identity_of(o))
        return "tau of the identity is not the identity family";
    return "";
  });

  r.add(4, "promotion collapse isopair", [&](Budget&) -> std::string {
    const FinCat& c = r.item("isopair").cat;
    FinFunctor pi;
    std::string err = make_functor(c, c, {{"x", "x"}, {"y", "x"}},
                                   {{"x->y", "id:x"}, {"y->x", "id:x"}}, pi);
    if (!err.empty()) return err;
    if (!classify_functor(pi).equivalence) return "collapse is not an equivalence";
    PromotionResult pm = promote_to_isomorphism(pi);
    if (!pm.promoted()) return "collapse failed to promote";
    if (!(*pm.phi == identity_functor(c))) return "promoted functor is not the identity";
    if (pm.tau[c.find_object("x")] != c.identity_of(c.find_object("x")))
      return "tau at x is not the identity";
    if (pm.tau[c.find_object("y")] != c.find_morphism("y->x"))
      return "tau at y is not the exchange morphism";
    return "";
  });

  r.add(4, "promotion cross-category collapse", [&](Budget&) -> std::string {
    const FinCat& src = r.item("isopair").cat;
    CatalogResult one = catalog("discrete:1");
    if (!one.entry) return "point category failed to build";
    const FinCat& dst = one.entry->cat;
    FinFunctor pi;
    std::string err = make_functor(src, dst, {{"x", "o1"}, {"y", "o1"}},
                                   {{"x->y", "id:o1"}, {"y->x", "id:o1"}}, pi);
    if (!err.empty()) return err;
    if (!classify_functor(pi).equivalence) return "collapse is not an equivalence";
    PromotionResult pm = promote_to_isomorphism(pi);
    if (pm.promoted()) return "collapse onto a point must not promote";
    std::string got = obstruction_list_str(src, dst, pm.obstructions);
    if (got != "[(x,o1,2,1) (y,o1,2,1)]") return "obstruction list is " + got;
    return "";
  });
}

// ---- criterion 5: the criterion is complete against exhaustive search ----

void cases_completeness(Runner& r) {
  for (const auto& item : r.corpus) {
    if (item.cat.object_count() > 4) continue;
    r.add(5, "obstruction-completeness " + item.name, [&](Budget& budget) -> std::string {
      std::vector<FinFunctor> eqs = enumerate_autoequivalences(item.cat, budget, r.eopts());
      std::vector<FinFunctor> autos = enumerate_automorphisms(item.cat, budget, r.eopts());
      for (const FinFunctor& pi : eqs) {
        bool obstructed = !fiber_criterion(pi).empty();
        bool matched = false;
        for (const FinFunctor& a : autos)
          if (are_naturally_isomorphic(pi, a, budget)) {
            matched = true;
            break;
          }
        if (obstructed == matched)
          return obstructed
                     ? "an obstructed autoequivalence matches an isomorphism"
                     : "an unobstructed autoequivalence matches no isomorphism";
      }
      return "";
    });
  }
  r.add(5, "obstruction-completeness collapse", [&](Budget& budget) -> std::string {
    const FinCat& src = r.item("isopair").cat;
    CatalogResult one = catalog("discrete:1");
    if (!one.entry) return "point category failed to build";
    const FinCat& dst = one.entry->cat;
    std::vector<FinFunctor> all = enumerate_functors(src, dst, budget, r.eopts());
    if (all.size() != 1)
      return "expected exactly one functor onto the point, got " +
             std::to_string(all.size());
    const FinFunctor& pi = all.front();
    if (!classify_functor(pi).equivalence) return "collapse is not an equivalence";
    if (fiber_criterion(pi).empty()) return "collapse reports no obstruction";
    for (const FinFunctor& f : all)
      if (classify_functor(f).isomorphism) return "an isomorphism onto the point exists";
    return "";
  });
}

// ---- criterion 6: criterion mode and oracle mode always agree ----

void cases_mode_agreement(Runner& r) {
  for (const auto& item : r.corpus) {
    r.add(6, "mode-agreement " + item.name, [&](Budget& budget) -> std::string {
      ProperResult pr =
          has_proper_autoequivalence(item.cat, ProperMode::kBoth, budget, r.eopts());
      if (!pr.criterion_verdict || !pr.oracle_verdict) return "a mode did not report";
      if (!pr.modes_agree) return "criterion and oracle disagree";
      if (uniform_class_check(item.cat) && pr.verdict != ProperVerdict::kNoProper)
        return "uniform class sizes but a proper autoequivalence was found";
      return "";
    });
  }
  if (r.scope != SuiteScope::kFast) {
    r.add(6, "mode-agreement preorders-3", [&](Budget& budget) -> std::string {
      std::vector<FinCat> ps = all_preorders_on_3();
      for (size_t i = 0; i < ps.size(); ++i) {
        ProperResult pr =
            has_proper_autoequivalence(ps[i], ProperMode::kBoth, budget, r.eopts());
        if (!pr.modes_agree) return "preorder " + std::to_string(i) + ": modes disagree";
        if (uniform_class_check(ps[i]) && pr.verdict != ProperVerdict::kNoProper)
          return "preorder " + std::to_string(i) + ": uniform classes but proper";
      }
      return "";
    });
  }
}

// ---- criterion 7: surjectivity onto invertible classes tracks the verdict ----

void cases_eta(Runner& r) {
  const EndoQuotientCaps caps;
  for (const auto& item : r.corpus) {
    if (item.cat.object_count() > caps.max_objects ||
        item.cat.morphism_count() > caps.max_morphisms)
      continue;
    r.add(7, "eta-agreement " + item.name, [&](Budget& budget) -> std::string {
      EtaAgreement ea = verify_eta_iff_no_proper(item.cat, budget, r.eopts());
      if (!ea.proper_modes_agree) return "criterion and oracle disagree inside the verdict";
      if (!ea.agree)
        return "surjectivity onto invertible classes disagrees with the verdict";
      return "";
    });
  }
  // The finite-sets example exceeds the default morphism guard, so it gets
  // explicitly raised caps. Its endofunctor classes are the two constant
  // functors, the identity, and the retract onto a point of a 2-element
  // object; only the identity class is invertible, and it contains an
  // automorphism, so the surjectivity verdict is positive.
  r.add(7, "eta-agreement finset:1,2,2 raised-caps",
        [&](Budget& budget) -> std::string {
          const FinCat& c = r.item("finset:1,2,2").cat;
          const EndoQuotientCaps raised{5, 32};
          EndoMonoidQuotient q = endo_quotient(c, budget, r.eopts(), raised);
          if (q.class_count() != 4)
            return "expected 4 endofunctor classes, got " +
                   std::to_string(q.class_count());
          if (q.invertible_classes.size() != 1 || q.aut_image.size() != 1)
            return "expected exactly one invertible class reached by automorphisms";
          if (!q.eta_star_surjective) return "surjectivity verdict is negative";
          EtaAgreement ea =
              verify_eta_iff_no_proper(c, budget, r.eopts(), raised);
          if (!ea.agree || !ea.proper_modes_agree) return "verdicts disagree";
          return "";
        });
  if (r.scope != SuiteScope::kFast) {
    r.add(7, "eta-agreement preorders-3", [&](Budget& budget) -> std::string {
      std::vector<FinCat> ps = all_preorders_on_3();
      for (size_t i = 0; i < ps.size(); ++i) {
        EtaAgreement ea = verify_eta_iff_no_proper(ps[i], budget, r.eopts());
        if (!ea.agree || !ea.proper_modes_agree)
          return "preorder " + std::to_string(i) + ": disagreement";
      }
      return "";
    });
  }
}

// ---- criterion 8: every autoequivalence of the finite-sets example is inner ----

void cases_rigid_concrete(Runner& r) {
  r.add(8, "autoequivalences-trivial finset:1,2,2", [&](Budget& budget) -> std::string {
    const FinCat& c = r.item("finset:1,2,2").cat;
    std::vector<FinFunctor> eqs = enumerate_autoequivalences(c, budget, r.eopts());
    if (eqs.size() != 16)
      return "expected 16 autoequivalences, got " + std::to_string(eqs.size());
    FinFunctor id = identity_functor(c);
    for (const FinFunctor& pi : eqs)
      if (!are_naturally_isomorphic(pi, id, budget))
        return "an autoequivalence is not isomorphic to the identity functor";
    return "";
  });
}

// ---- criterion 9: the transported automorphism pipeline ----

void cases_transport(Runner& r) {
  r.add(9, "transport-pipeline finset:1,2,2", [&](Budget& budget) -> std::string {
    const CorpusItem& item = r.item("finset:1,2,2");
    if (!item.concrete) return "no underlying data";
    ConcreteFinCat k{item.cat, *item.concrete};
    StarCheckResult star = check_star_condition(k);
    if (!star.holds) return "transport condition fails";
    int w = -1;
    for (int o = 0; o < k.cat.object_count() && w < 0; ++o)
      if (k.data.labels[o].size() == 1) w = o;
    if (w < 0) return "no one-element object";
    std::optional<Representation> g = find_representation(k, w);
    if (!g) return "no representation at the one-element object";
    std::vector<FinFunctor> eqs = enumerate_autoequivalences(k.cat, budget, r.eopts());
    if (eqs.size() != 16)
      return "expected 16 autoequivalences, got " + std::to_string(eqs.size());
    for (const FinFunctor& pi : eqs) {
      std::optional<Representation> h = find_representation(k, pi.obj(w));
      if (!h) return "no representation at the image of the witness";
      std::vector<std::vector<int>> u = transport_bijections(k, pi, *g, *h);
      TransportOutcome out = build_transported_automorphism(k, pi, u);
      if (!out.ok()) return "transport refused: " + out.violations.front().law;
      const FinFunctor& f = out.automorphism->functor;
      if (!classify_functor(f).isomorphism)
        return "transported functor is not an isomorphism";
      NatTransCheck ntc = check_nat_trans(f, pi, out.automorphism->u_star);
      if (!ntc.ok || !ntc.all_components_iso)
        return "u* family is not a natural isomorphism";
      if (!are_naturally_isomorphic(f, pi, budget))
        return "transported automorphism is not isomorphic to the input";
      for (int a = 0; a < k.cat.object_count(); ++a) {
        if (!same_label_set(k, f.obj(a), a)) return "underlying set changed";
        if (f.obj(a) != a)
          return "distinct label sets force the identity on objects, got a move";
      }
    }
    return "";
  });
}

// ---- criterion 10: endomorphism monoids of same-size objects ----

void cases_end_monoids(Runner& r) {
  r.add(10, "end-monoids finset:1,2,2", [&](Budget&) -> std::string {
    const CorpusItem& item = r.item("finset:1,2,2");
    if (!item.concrete) return "no underlying data";
    const FinCat& c = item.cat;
    std::vector<int> two_elt, one_elt;
    for (int o = 0; o < c.object_count(); ++o) {
      if (item.concrete->labels[o].size() == 2) two_elt.push_back(o);
      if (item.concrete->labels[o].size() == 1) one_elt.push_back(o);
    }
    if (two_elt.size() != 2 || one_elt.size() != 1) return "unexpected object sizes";
    FinMonoid m1 = end_monoid(c, two_elt[0]);
    FinMonoid m2 = end_monoid(c, two_elt[1]);
    FinMonoid m0 = end_monoid(c, one_elt[0]);
    if (m0.size() != 1) return "END of the one-element object is not trivial";
    if (m1.size() != 4 || m2.size() != 4)
      return "END orders are " + std::to_string(m1.size()) + " and " +
             std::to_string(m2.size()) + ", expected 4 and 4";
    std::optional<std::vector<int>> wit = monoids_isomorphic(m1, m2);
    if (!wit) return "no monoid isomorphism found";
    const std::vector<int>& f = *wit;
    std::vector<bool> hit(m2.size(), false);
    for (int x : f) {
      if (x < 0 || x >= m2.size() || hit[x]) return "witness is not a bijection";
      hit[x] = true;
    }
    if (f[m1.identity] != m2.identity) return "witness does not preserve the identity";
    for (int x = 0; x < m1.size(); ++x)
      for (int y = 0; y < m1.size(); ++y)
        if (m2.mul(f[x], f[y]) != f[m1.mul(x, y)]) return "witness is not multiplicative";
    return "";
  });
}

// ---- criterion 11: determinism of reports and worker independence ----

void cases_determinism(Runner& r) {
  r.add(11, "determinism reports", [&](Budget&) -> std::string {
    std::string err;
    auto build = [&]() -> std::vector<std::string> {
      std::vector<std::string> reports;
      EnumerationOptions eo = r.eopts();
      for (const char* name : {"p4", "e3"}) {
        const FinCat& c = r.item(name).cat;
        std::string file = category_json(c);
        Budget b(r.opts.budget);
        ProperResult pr = has_proper_autoequivalence(c, ProperMode::kBoth, b, eo);
        reports.push_back(make_report("proper", input_digest({file}), "ok",
                                      ReportStats{b.used(), 0}, proper_json(c, pr),
                                      "{}"));
      }
      {
        const CorpusItem& it = r.item("finset:1,2,2");
        std::string file =
            category_json(it.cat, it.concrete ? &*it.concrete : nullptr);
        Budget b(r.opts.budget);
        std::vector<FinFunctor> eqs = enumerate_autoequivalences(it.cat, b, eo);
        reports.push_back(make_report("autoequiv", input_digest({file}), "ok",
                                      ReportStats{b.used(), 0}, functor_list_json(eqs),
                                      "{}"));
      }
      {
        const FinCat& c = r.item("p4").cat;
        Budget b(r.opts.budget);
        EndoMonoidQuotient q = endo_quotient(c, b, eo);
        reports.push_back(make_report("quotient", input_digest({category_json(c)}), "ok",
                                      ReportStats{b.used(), 0}, quotient_json(q), "{}"));
      }
      {
        const FinCat& c = r.item("p4").cat;
        SkeletonData s = compute_skeleton(c);
        NatComponents wit = verify_nu_inner(s);
        reports.push_back(make_report("skeleton", input_digest({category_json(c)}), "ok",
                                      ReportStats{0, 0}, skeleton_json(s),
                                      "{\"inner\":" + components_json(c, c, wit) + "}"));
      }
      {
        const FinCat& c = r.item("e3").cat;
        FinFunctor phi;
        err = e3_exchange(c, phi);
        if (!err.empty()) return reports;
        PromotionResult pm = promote_to_isomorphism(phi);
        reports.push_back(make_report(
            "promote", input_digest({category_json(c), functor_json(phi)}), "ok",
            ReportStats{0, 0}, promotion_json(phi, pm), "{}"));
      }
      return reports;
    };
    std::vector<std::string> first = build();
    if (!err.empty()) return err;
    std::vector<std::string> second = build();
    if (!err.empty()) return err;
    if (first != second) return "repeated runs produce different reports";
    return "";
  });

  r.add(11, "determinism workers", [&](Budget&) -> std::string {
    for (const char* name : {"p4", "e3", "isopair", "iso2x2"}) {
      const FinCat& c = r.item(name).cat;
      Budget b1(r.opts.budget), b2(r.opts.budget);
      std::vector<FinFunctor> a1 = enumerate_autoequivalences(c, b1, EnumerationOptions{1});
      std::vector<FinFunctor> a2 = enumerate_autoequivalences(c, b2, EnumerationOptions{2});
      if (!(a1 == a2)) return std::string(name) + ": lists differ across worker counts";
      if (b1.used() != b2.used())
        return std::string(name) + ": node totals differ across worker counts";
      Budget b3(r.opts.budget), b4(r.opts.budget);
      std::vector<FinFunctor> f1 = enumerate_functors(c, c, b3, EnumerationOptions{1});
      std::vector<FinFunctor> f2 = enumerate_functors(c, c, b4, EnumerationOptions{3});
      if (!(f1 == f2))
        return std::string(name) + ": functor lists differ across worker counts";
      if (b3.used() != b4.used())
        return std::string(name) + ": functor node totals differ across worker counts";
    }
    return "";
  });

  r.add(11, "determinism worker reports", [&](Budget&) -> std::string {
    const FinCat& c = r.item("p4").cat;
    std::string file = category_json(c);
    auto one = [&](int workers) -> std::string {
      Budget b(r.opts.budget);
      ProperResult pr =
          has_proper_autoequivalence(c, ProperMode::kBoth, b, EnumerationOptions{workers});
      return make_report("proper", input_digest({file}), "ok", ReportStats{b.used(), 0},
                         proper_json(c, pr), "{}");
    };
    std::string w1 = one(1), w2 = one(2), w4 = one(4);
    if (w1 != w2 || w1 != w4) return "reports differ across worker counts";
    return "";
  });
}

// ---- supplementary cross-checks (exhaustive-3 and full scopes) ----

void cases_supplementary(Runner& r) {
  if (r.scope == SuiteScope::kFast) return;

  r.add(0, "catalog-pins", [&](Budget& budget) -> std::string {
    struct Pin {
      const char* name;
      int objects;
      int morphisms;
      int endos;  // -1 = skip the full endofunctor enumeration
      int autoeqs;
      int autos;
    };
    const std::vector<Pin> pins = {
        {"p4", 4, 9, 41, 6, 2},          {"e3", 3, 5, 15, 6, 2},
        {"isopair", 2, 4, 4, 4, 2},      {"discrete:2", 2, 2, 4, 2, 2},
        {"finset:1,2,2", 3, 23, -1, 16, 8}, {"iso2x2", 4, 8, 64, 32, 8}};
    for (const Pin& p : pins) {
      const FinCat& c = r.item(p.name).cat;
      std::string at = std::string(p.name) + ": ";
      if (c.object_count() != p.objects)
        return at + "object count " + std::to_string(c.object_count()) + ", expected " +
               std::to_string(p.objects);
      if (c.morphism_count() != p.morphisms)
        return at + "morphism count " + std::to_string(c.morphism_count()) +
               ", expected " + std::to_string(p.morphisms);
      if (p.endos >= 0) {
        std::vector<FinFunctor> endos = enumerate_functors(c, c, budget, r.eopts());
        if (static_cast<int>(endos.size()) != p.endos)
          return at + "endofunctor count " + std::to_string(endos.size()) +
                 ", expected " + std::to_string(p.endos);
      }
      std::vector<FinFunctor> eqs = enumerate_autoequivalences(c, budget, r.eopts());
      if (static_cast<int>(eqs.size()) != p.autoeqs)
        return at + "autoequivalence count " + std::to_string(eqs.size()) +
               ", expected " + std::to_string(p.autoeqs);
      std::vector<FinFunctor> autos = enumerate_automorphisms(c, budget, r.eopts());
      if (static_cast<int>(autos.size()) != p.autos)
        return at + "automorphism count " + std::to_string(autos.size()) + ", expected " +
               std::to_string(p.autos);
    }
    return "";
  });

  r.add(0, "quotient-pins", [&](Budget& budget) -> std::string {
    struct QPin {
      const char* name;
      int endos;  // -1 = skip
      int classes;
      int invertible;
      int aut_image;
      bool eta;
    };
    const std::vector<QPin> pins = {{"p4", 41, 11, 2, 1, false},
                                    {"e3", 15, 4, 2, 1, false},
                                    {"isopair", 4, 1, 1, 1, true},
                                    {"discrete:2", 4, 4, 2, 2, true}};
    for (const QPin& p : pins) {
      EndoMonoidQuotient q = endo_quotient(r.item(p.name).cat, budget, r.eopts());
      std::string at = std::string(p.name) + ": ";
      if (p.endos >= 0 && static_cast<int>(q.endofunctors.size()) != p.endos)
        return at + "endofunctor count " + std::to_string(q.endofunctors.size());
      if (q.class_count() != p.classes)
        return at + "class count " + std::to_string(q.class_count()) + ", expected " +
               std::to_string(p.classes);
      if (static_cast<int>(q.invertible_classes.size()) != p.invertible)
        return at + "invertible class count " +
               std::to_string(q.invertible_classes.size()) + ", expected " +
               std::to_string(p.invertible);
      if (static_cast<int>(q.aut_image.size()) != p.aut_image)
        return at + "automorphism image size " + std::to_string(q.aut_image.size()) +
               ", expected " + std::to_string(p.aut_image);
      if (q.eta_star_surjective != p.eta) return at + "surjectivity flag wrong";
      if (q.identity_class < 0) return at + "identity class missing";
      for (int a : q.aut_image)
        if (!std::binary_search(q.invertible_classes.begin(),
                                q.invertible_classes.end(), a))
          return at + "an automorphism class is not invertible";
    }
    return "";
  });

  r.add(0, "natiso-equivalence-relation e3", [&](Budget& budget) -> std::string {
    const FinCat& c = r.item("e3").cat;
    std::vector<FinFunctor> endos = enumerate_functors(c, c, budget, r.eopts());
    const int n = static_cast<int>(endos.size());
    std::vector<std::vector<bool>> iso(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        iso[i][j] = are_naturally_isomorphic(endos[i], endos[j], budget);
    for (int i = 0; i < n; ++i)
      if (!iso[i][i]) return "relation is not reflexive";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (iso[i][j] != iso[j][i]) return "relation is not symmetric";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (iso[i][j] && iso[j][k] && !iso[i][k]) return "relation is not transitive";
    return "";
  });

  r.add(0, "composition-closure e3", [&](Budget& budget) -> std::string {
    const FinCat& c = r.item("e3").cat;
    std::vector<FinFunctor> endos = enumerate_functors(c, c, budget, r.eopts());
    if (!std::is_sorted(endos.begin(), endos.end(), functor_less))
      return "enumeration is not in canonical order";
    for (const FinFunctor& f : endos)
      for (const FinFunctor& g : endos) {
        FinFunctor h = compose_functors(f, g);
        auto it = std::lower_bound(endos.begin(), endos.end(), h, functor_less);
        if (it == endos.end() || !(*it == h))
          return "a composite is missing from the enumeration";
      }
    return "";
  });

  r.add(0, "class-bijection p4", [&](Budget& budget) -> std::string {
    const FinCat& c = r.item("p4").cat;
    const IsoPartition& part = c.iso_classes();
    std::vector<FinFunctor> eqs = enumerate_autoequivalences(c, budget, r.eopts());
    for (const FinFunctor& pi : eqs) {
      std::vector<int> image(part.classes.size(), -1);
      for (size_t k = 0; k < part.classes.size(); ++k)
        for (int member : part.classes[k]) {
          int kk = part.class_of[pi.obj(member)];
          if (image[k] < 0)
            image[k] = kk;
          else if (image[k] != kk)
            return "induced class map is not well-defined";
        }
      std::vector<bool> hit(part.classes.size(), false);
      for (int kk : image) {
        if (kk < 0 || hit[kk]) return "induced class map is not a bijection";
        hit[kk] = true;
      }
    }
    return "";
  });

  r.add(0, "retraction-idempotent", [&](Budget&) -> std::string {
    for (const auto& item : r.corpus) {
      SkeletonData s = compute_skeleton(item.cat);
      for (int o = 0; o < item.cat.object_count(); ++o)
        if (s.nu.obj(s.nu.obj(o)) != s.nu.obj(o))
          return item.name + ": retraction is not idempotent on objects";
      for (int m = 0; m < item.cat.morphism_count(); ++m)
        if (s.nu.mor(s.nu.mor(m)) != s.nu.mor(m))
          return item.name + ": retraction is not idempotent on morphisms";
    }
    return "";
  });

  r.add(0, "preorder-thinness", [&](Budget&) -> std::string {
    std::vector<FinCat> ps = all_preorders_on_3();
    for (size_t i = 0; i < ps.size(); ++i)
      for (int a = 0; a < ps[i].object_count(); ++a)
        for (int b = 0; b < ps[i].object_count(); ++b)
          if (ps[i].hom(a, b).size() > 1)
            return "preorder " + std::to_string(i) + ": a hom-set has two morphisms";
    return "";
  });

  r.add(0, "empty-category", [&](Budget& budget) -> std::string {
    CatalogResult res = catalog("discrete:0");
    if (!res.entry) return "empty category rejected: " + res.error;
    const FinCat& c = res.entry->cat;
    if (c.object_count() != 0 || c.morphism_count() != 0)
      return "empty category has content";
    std::vector<FinFunctor> endos = enumerate_functors(c, c, budget, r.eopts());
    if (endos.size() != 1) return "expected exactly one endofunctor";
    ProperResult pr = has_proper_autoequivalence(c, ProperMode::kBoth, budget, r.eopts());
    if (pr.verdict != ProperVerdict::kNoProper || !pr.modes_agree)
      return "empty category verdict wrong";
    EndoMonoidQuotient q = endo_quotient(c, budget, r.eopts());
    if (q.class_count() != 1 || !q.eta_star_surjective)
      return "empty category quotient wrong";
    if (!promote_to_isomorphism(endos.front()).promoted())
      return "empty identity failed to promote";
    return "";
  });

  r.add(0, "budget-overrun", [&](Budget&) -> std::string {
    const FinCat& c = r.item("p4").cat;
    Budget tiny(3);
    try {
      enumerate_functors(c, c, tiny, EnumerationOptions{1});
      return "a 3-node budget completed the search";
    } catch (const BudgetExceeded&) {
      if (tiny.used() != 4)
        return "saturated count is " + std::to_string(tiny.used()) + ", expected 4";
    }
    return "";
  });

  if (r.scope != SuiteScope::kFull) return;

  r.add(0, "promotion-soundness preorders-3", [&](Budget& budget) -> std::string {
    std::vector<FinCat> ps = all_preorders_on_3();
    for (size_t i = 0; i < ps.size(); ++i) {
      std::string at = "preorder " + std::to_string(i) + ": ";
      std::vector<FinFunctor> eqs = enumerate_autoequivalences(ps[i], budget, r.eopts());
      std::vector<FinFunctor> autos = enumerate_automorphisms(ps[i], budget, r.eopts());
      for (const FinFunctor& pi : eqs) {
        PromotionResult pm = promote_to_isomorphism(pi);
        if (pm.promoted()) {
          if (!classify_functor(*pm.phi).isomorphism) return at + "bad promoted functor";
          NatTransCheck ntc = check_nat_trans(*pm.phi, pi, pm.tau);
          if (!ntc.ok || !ntc.all_components_iso) return at + "bad tau";
        } else {
          for (const FinFunctor& a : autos)
            if (are_naturally_isomorphic(pi, a, budget))
              return at + "obstructed but matches an isomorphism";
        }
      }
    }
    return "";
  });

  r.add(0, "invertible-closure preorders-3", [&](Budget& budget) -> std::string {
    std::vector<FinCat> ps = all_preorders_on_3();
    for (size_t i = 0; i < ps.size(); ++i) {
      EndoMonoidQuotient q = endo_quotient(ps[i], budget, r.eopts());
      for (int a : q.invertible_classes)
        for (int b : q.invertible_classes)
          if (!std::binary_search(q.invertible_classes.begin(),
                                  q.invertible_classes.end(), q.mul(a, b)))
            return "preorder " + std::to_string(i) +
                   ": invertible classes not closed under composition";
    }
    return "";
  });
}

}  // namespace

const char* suite_scope_name(SuiteScope scope) {
  switch (scope) {
    case SuiteScope::kFast:
      return "fast";
    case SuiteScope::kExhaustive3:
      return "exhaustive-3";
    case SuiteScope::kFull:
      return "full";
  }
  return "fast";
}

std::optional<SuiteScope> parse_suite_scope(const std::string& name) {
  if (name == "fast") return SuiteScope::kFast;
  if (name == "exhaustive-3") return SuiteScope::kExhaustive3;
  if (name == "full") return SuiteScope::kFull;
  return std::nullopt;
}

SuiteResult run_suite(SuiteScope scope, const SuiteOptions& opts) {
  Runner r{scope, opts};
  cases_retraction(r);
  cases_swap_witness(r);
  cases_construction_witness(r);
  cases_promotion(r);
  cases_completeness(r);
  cases_mode_agreement(r);
  cases_eta(r);
  cases_rigid_concrete(r);
  cases_transport(r);
  cases_end_monoids(r);
  cases_determinism(r);
  cases_supplementary(r);
  SuiteResult out;
  out.cases = std::move(r.cases);
  out.nodes_visited = r.nodes;
  return out;
}

}  // namespace fincat

#include "fincat/concrete.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fincat/category.hpp"

namespace fincat {

namespace {

int label_position(const std::vector<std::string>& labels, const std::string& l) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<int>(i);
  return -1;
}

/// First isomorphism cand -> b (hom input order) whose underlying map equals
/// u read through cand's labelling of Q(a); -1 when none. Requires
/// Q(cand) == Q(a) as sets.
int find_lifting_iso(const ConcreteFinCat& k, int cand, int a, int b,
                     const std::vector<int>& u) {
  const FinCat& c = k.cat;
  const auto& cl = k.data.labels[cand];
  const auto& al = k.data.labels[a];
  std::vector<int> pos_in_a(cl.size(), -1);
  for (size_t p = 0; p < cl.size(); ++p) pos_in_a[p] = label_position(al, cl[p]);
  for (int w : c.hom(cand, b)) {
    if (!c.is_isomorphism(w)) continue;
    bool lifts = true;
    for (size_t p = 0; p < cl.size() && lifts; ++p)
      lifts = k.data.mor_fn[w][p] == u[pos_in_a[p]];
    if (lifts) return w;
  }
  return -1;
}

}  // namespace

ConcreteValidation validate_concrete(
    const FinCat& cat, const std::map<std::string, std::vector<std::string>>& underlying,
    const std::map<std::string, std::map<std::string, std::string>>& mor_fn) {
  ConcreteValidation out;
  auto fail = [&](std::string law, std::string detail) {
    out.violations.push_back({std::move(law), std::move(detail)});
  };

  for (const auto& [id, labels] : underlying)
    if (cat.find_object(id) < 0) fail("underlying-unknown", id);
  for (const auto& [id, fn] : mor_fn)
    if (cat.find_morphism(id) < 0) fail("mor-fn-unknown", id);

  ConcreteData data;
  data.labels.resize(cat.object_count());
  for (int o = 0; o < cat.object_count(); ++o) {
    auto it = underlying.find(cat.object_id(o));
    if (it == underlying.end()) {
      fail("underlying-missing", cat.object_id(o));
      continue;
    }
    data.labels[o] = it->second;
    std::set<std::string> seen;
    for (const auto& l : it->second)
      if (!seen.insert(l).second) fail("duplicate-label", cat.object_id(o) + ": " + l);
  }
  if (!out.violations.empty()) return out;

  data.mor_fn.assign(cat.morphism_count(), {});
  for (int i = 0; i < cat.morphism_count(); ++i) {
    const auto& m = cat.morphism(i);
    auto& vec = data.mor_fn[i];
    auto it = mor_fn.find(m.id);
    if (it == mor_fn.end()) {
      if (cat.is_identity(i)) {  // identity maps may be left implicit
        vec.resize(data.labels[m.dom].size());
        std::iota(vec.begin(), vec.end(), 0);
        continue;
      }
      fail("mor-fn-missing", m.id);
      continue;
    }
    vec.assign(data.labels[m.dom].size(), -1);
    for (const auto& [from, to] : it->second) {
      const int p = label_position(data.labels[m.dom], from);
      if (p < 0) {
        fail("mor-fn-unknown-label", m.id + ": " + from);
        continue;
      }
      const int q = label_position(data.labels[m.cod], to);
      if (q < 0) {
        fail("mor-fn-dangling-label", m.id + ": " + from + " -> " + to);
        continue;
      }
      vec[p] = q;
    }
    for (size_t p = 0; p < vec.size(); ++p)
      if (vec[p] < 0) fail("mor-fn-total", m.id + ": no image for " + data.labels[m.dom][p]);
  }
  if (!out.violations.empty()) return out;

  for (int o = 0; o < cat.object_count(); ++o) {
    const int id = cat.identity_of(o);
    for (size_t p = 0; p < data.mor_fn[id].size(); ++p) {
      if (data.mor_fn[id][p] != static_cast<int>(p)) {
        fail("identity-map", cat.morphism(id).id);
        break;
      }
    }
  }
  for (int f = 0; f < cat.morphism_count(); ++f) {
    for (int g = 0; g < cat.morphism_count(); ++g) {
      const int h = cat.compose(f, g);
      if (h < 0) continue;
      for (size_t p = 0; p < data.mor_fn[f].size(); ++p) {
        if (data.mor_fn[g][data.mor_fn[f][p]] != data.mor_fn[h][p]) {
          fail("composition-map",
               cat.morphism(f).id + " then " + cat.morphism(g).id + " != " + cat.morphism(h).id);
          break;
        }
      }
    }
  }
  for (int a = 0; a < cat.object_count(); ++a) {
    for (int b = 0; b < cat.object_count(); ++b) {
      const auto& hom = cat.hom(a, b);
      for (size_t i = 0; i < hom.size(); ++i)
        for (size_t j = i + 1; j < hom.size(); ++j)
          if (data.mor_fn[hom[i]] == data.mor_fn[hom[j]])
            fail("faithfulness", cat.morphism(hom[i]).id + " = " + cat.morphism(hom[j]).id);
    }
  }
  if (!out.violations.empty()) return out;

  out.data = std::move(data);
  return out;
}

bool same_label_set(const ConcreteFinCat& k, int obj_a, int obj_b) {
  std::vector<std::string> la = k.data.labels[obj_a];
  std::vector<std::string> lb = k.data.labels[obj_b];
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb;
}

StarCheckResult check_star_condition(const ConcreteFinCat& k, int size_cap) {
  const FinCat& c = k.cat;
  for (int o = 0; o < c.object_count(); ++o)
    if (static_cast<int>(k.data.labels[o].size()) > size_cap)
      throw CapExceeded("structure-transport check: object " + c.object_id(o) + " has " +
                        std::to_string(k.data.labels[o].size()) + " elements, cap is " +
                        std::to_string(size_cap));

  StarCheckResult out;
  for (int a = 0; a < c.object_count(); ++a) {
    for (int b = 0; b < c.object_count(); ++b) {
      if (k.data.labels[a].size() != k.data.labels[b].size()) continue;
      std::vector<int> u(k.data.labels[a].size());
      std::iota(u.begin(), u.end(), 0);
      do {
        int count = 0;
        for (int cand = 0; cand < c.object_count(); ++cand) {
          if (!same_label_set(k, cand, a)) continue;
          if (find_lifting_iso(k, cand, a, b, u) >= 0) ++count;
        }
        if (count != 1) {
          out.holds = false;
          out.failure = StarFailure{a, b, u, count};
          return out;
        }
      } while (std::next_permutation(u.begin(), u.end()));
    }
  }
  out.holds = true;
  return out;
}

namespace {

// Naturality of the partial family g over every morphism whose endpoints are
// both assigned and that touches the newest object a.
bool representation_consistent(const ConcreteFinCat& k, const std::vector<std::vector<int>>& g,
                               int a) {
  const FinCat& c = k.cat;
  for (int i = 0; i < c.morphism_count(); ++i) {
    const auto& m = c.morphism(i);
    if (m.dom > a || m.cod > a || (m.dom != a && m.cod != a)) continue;
    const auto& fn = k.data.mor_fn[i];
    for (size_t p = 0; p < g[m.dom].size(); ++p)
      if (c.compose(g[m.dom][p], i) != g[m.cod][fn[p]]) return false;
  }
  return true;
}

}  // namespace

std::optional<Representation> find_representation(const ConcreteFinCat& k, int witness,
                                                  int size_cap) {
  const FinCat& c = k.cat;
  if (witness < 0 || witness >= c.object_count())
    throw std::invalid_argument("find_representation: no such object");
  for (int o = 0; o < c.object_count(); ++o)
    if (static_cast<int>(k.data.labels[o].size()) > size_cap)
      throw CapExceeded("representation search: object " + c.object_id(o) + " has " +
                        std::to_string(k.data.labels[o].size()) + " elements, cap is " +
                        std::to_string(size_cap));
  for (int o = 0; o < c.object_count(); ++o)
    if (k.data.labels[o].size() != c.hom(witness, o).size()) return std::nullopt;

  const int n = c.object_count();
  std::vector<std::vector<int>> g(n);
  std::function<bool(int)> assign = [&](int a) -> bool {
    if (a == n) return true;
    std::vector<int> perm = c.hom(witness, a);  // ascending, so the loop is lexicographic
    do {
      g[a] = perm;
      if (representation_consistent(k, g, a) && assign(a + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    g[a].clear();
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return Representation{witness, std::move(g)};
}

std::vector<std::vector<int>> transport_bijections(const ConcreteFinCat& k,
                                                   const FinFunctor& pi,
                                                   const Representation& g,
                                                   const Representation& h) {
  const FinCat& c = k.cat;
  if (pi.source != &k.cat || pi.target != &k.cat)
    throw std::invalid_argument("transport_bijections: functor is not over this category");
  if (!classify_functor(pi).equivalence)
    throw std::invalid_argument("transport_bijections: functor is not an autoequivalence");
  if (g.witness < 0 || g.witness >= c.object_count() ||
      static_cast<int>(g.g.size()) != c.object_count() ||
      static_cast<int>(h.g.size()) != c.object_count())
    throw std::invalid_argument("transport_bijections: malformed representation");
  if (h.witness != pi.obj(g.witness))
    throw std::invalid_argument(
        "transport_bijections: second representation is not based at the image object");
  if (c.iso_classes().class_of[g.witness] != c.iso_classes().class_of[h.witness])
    throw std::invalid_argument(
        "transport_bijections: base object is not isomorphic to its image");

  std::vector<std::vector<int>> u(c.object_count());
  for (int a = 0; a < c.object_count(); ++a) {
    const int pa = pi.obj(a);
    u[a].assign(k.data.labels[a].size(), -1);
    for (size_t x = 0; x < u[a].size(); ++x) {
      const int target_mor = pi.mor(g.g[a][x]);
      const auto& hg = h.g[pa];
      int pos = -1;
      for (size_t p = 0; p < hg.size(); ++p) {
        if (hg[p] == target_mor) {
          pos = static_cast<int>(p);
          break;
        }
      }
      if (pos < 0)
        throw std::logic_error("transport_bijections: image morphism missing from the family");
      u[a][x] = pos;
    }
  }
  for (int i = 0; i < c.morphism_count(); ++i) {
    const auto& m = c.morphism(i);
    const auto& fn = k.data.mor_fn[i];
    const auto& pfn = k.data.mor_fn[pi.mor(i)];
    for (size_t x = 0; x < k.data.labels[m.dom].size(); ++x)
      if (u[m.cod][fn[x]] != pfn[u[m.dom][x]])
        throw std::logic_error("transport_bijections: transport square does not commute");
  }
  return u;
}

TransportOutcome build_transported_automorphism(const ConcreteFinCat& k,
                                                const FinFunctor& pi,
                                                const std::vector<std::vector<int>>& u) {
  const FinCat& c = k.cat;
  if (pi.source != &k.cat || pi.target != &k.cat)
    throw std::invalid_argument(
        "build_transported_automorphism: functor is not over this category");
  if (!classify_functor(pi).equivalence)
    throw std::invalid_argument("build_transported_automorphism: functor is not an autoequivalence");
  if (static_cast<int>(u.size()) != c.object_count())
    throw std::invalid_argument("build_transported_automorphism: one bijection per object required");
  for (int a = 0; a < c.object_count(); ++a) {
    const size_t sa = k.data.labels[a].size();
    const size_t st = k.data.labels[pi.obj(a)].size();
    if (u[a].size() != sa || sa != st)
      throw std::invalid_argument("build_transported_automorphism: bijection arity mismatch");
    std::vector<char> hit(st, 0);
    for (int v : u[a]) {
      if (v < 0 || v >= static_cast<int>(st) || hit[v])
        throw std::invalid_argument("build_transported_automorphism: not a bijection");
      hit[v] = 1;
    }
  }

  TransportOutcome out;
  std::vector<int> fobj(c.object_count(), -1);
  std::vector<int> ustar(c.object_count(), -1);
  for (int a = 0; a < c.object_count(); ++a) {
    const int pa = pi.obj(a);
    int count = 0;
    for (int cand = 0; cand < c.object_count(); ++cand) {
      if (!same_label_set(k, cand, a)) continue;
      const int w = find_lifting_iso(k, cand, a, pa, u[a]);
      if (w < 0) continue;
      ++count;
      if (count == 1) {
        fobj[a] = cand;
        ustar[a] = w;
      }
    }
    if (count != 1)
      out.violations.push_back({"transport-uniqueness",
                                c.object_id(a) + ": " + std::to_string(count) +
                                    " matching objects, need exactly 1"});
  }
  if (!out.violations.empty()) return out;

  std::vector<int> fmor(c.morphism_count(), -1);
  for (int i = 0; i < c.morphism_count(); ++i) {
    const auto& m = c.morphism(i);
    const int head = c.compose(ustar[m.dom], pi.mor(i));
    const int whole = head < 0 ? -1 : c.compose(head, c.inverse_of(ustar[m.cod]));
    if (whole < 0)
      throw std::logic_error("build_transported_automorphism: conjugation not composable");
    fmor[i] = whole;
  }

  FunctorCheck fc = check_functor(c, c, fobj, fmor);
  if (!fc.ok())
    throw std::logic_error("build_transported_automorphism: transported map is not a functor");
  if (!classify_functor(*fc.functor).isomorphism)
    throw std::logic_error("build_transported_automorphism: transported functor is not an isomorphism");
  const NatTransCheck ntc = check_nat_trans(*fc.functor, pi, ustar);
  if (!ntc.ok || !ntc.all_components_iso)
    throw std::logic_error("build_transported_automorphism: u* is not a natural isomorphism");
  for (int a = 0; a < c.object_count(); ++a)
    if (!same_label_set(k, fc.functor->obj(a), a))
      throw std::logic_error("build_transported_automorphism: image object changes the label set");

  out.automorphism = TransportedAutomorphism{std::move(*fc.functor), std::move(ustar)};
  return out;
}

FinMonoid end_monoid(const FinCat& c, int obj) {
  if (obj < 0 || obj >= c.object_count())
    throw std::invalid_argument("end_monoid: no such object");
  FinMonoid m;
  m.elements = c.hom(obj, obj);
  const int n = m.size();
  std::unordered_map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[m.elements[i]] = i;
  m.table.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.table[i * n + j] = pos.at(c.compose(m.elements[i], m.elements[j]));
  m.identity = pos.at(c.identity_of(obj));
  return m;
}

std::optional<std::vector<int>> monoids_isomorphic(const FinMonoid& m1, const FinMonoid& m2,
                                                   int cap) {
  if (m1.size() != m2.size()) return std::nullopt;
  const int n = m1.size();
  if (n > cap)
    throw CapExceeded("monoid isomorphism search: order " + std::to_string(n) +
                      " exceeds the cap of " + std::to_string(cap));
  if (n == 0) return std::vector<int>{};

  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  phi[m1.identity] = m2.identity;
  used[m2.identity] = 1;
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (i != m1.identity) order.push_back(i);

  // A product constraint is checked at the moment its last participant is
  // assigned, so every triple is verified exactly when it becomes decidable.
  std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
    if (idx == order.size()) return true;
    const int x = order[idx];
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      phi[x] = y;
      used[y] = 1;
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        if (phi[a] < 0) continue;
        for (int b = 0; b < n && ok; ++b) {
          if (phi[b] < 0) continue;
          const int prod = m1.mul(a, b);
          if (a != x && b != x && prod != x) continue;
          if (phi[prod] < 0) continue;
          ok = m2.mul(phi[a], phi[b]) == phi[prod];
        }
      }
      if (ok && assign(idx + 1)) return true;
      phi[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  if (assign(0)) return phi;
  return std::nullopt;
}

}  // namespace fincat

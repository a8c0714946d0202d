#include "fincat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace fincat {

namespace {

// Backtracking enumerator for functors C -> D. Two modes:
//  - kAll: every functor.
//  - kFullFaithful: only functors whose hom-set restrictions are bijections
//    (prunes object maps with mismatched hom sizes and enforces per-hom-set
//    injectivity). Complete for full-and-faithful functors, hence for
//    autoequivalences and automorphisms after classification.
enum class Mode { kAll, kFullFaithful };

struct Triple {
  int f, g, h;  // compose(f, g) == h in the source, all non-identity f, g
};

struct FunctorSearch {
  const FinCat& c;
  const FinCat& d;
  Mode mode;
  Budget& budget;

  // Triples indexed by participating morphism, used to check composition
  // incrementally: a triple is verified when its last member is assigned.
  std::vector<std::vector<Triple>> triples_of;

  FunctorSearch(const FinCat& c_, const FinCat& d_, Mode mode_, Budget& budget_)
      : c(c_), d(d_), mode(mode_), budget(budget_) {
    triples_of.resize(c.morphism_count());
    for (int f = c.object_count(); f < c.morphism_count(); ++f) {
      for (int g = c.object_count(); g < c.morphism_count(); ++g) {
        const int h = c.compose(f, g);
        if (h < 0) continue;
        Triple t{f, g, h};
        triples_of[f].push_back(t);
        if (g != f) triples_of[g].push_back(t);
        if (h != f && h != g) triples_of[h].push_back(t);
      }
    }
  }

  bool obj_pair_feasible(const std::vector<int>& obj_map, int a, int b) const {
    const size_t src = c.hom(a, b).size();
    const size_t dst = d.hom(obj_map[a], obj_map[b]).size();
    if (mode == Mode::kFullFaithful) return src == dst;
    return src == 0 || dst > 0;
  }

  // Extends the morphism map position by position over the non-identity
  // morphisms; identities are pre-filled from the object map.
  void extend_morphisms(std::vector<int>& obj_map, std::vector<int>& mor_map, int pos,
                        std::vector<FinFunctor>& out) {
    if (pos == c.morphism_count()) {
      out.push_back(FinFunctor{&c, &d, obj_map, mor_map});
      return;
    }
    const auto& mor = c.morphism(pos);
    for (int cand : d.hom(obj_map[mor.dom], obj_map[mor.cod])) {
      budget.spend();
      if (mode == Mode::kFullFaithful) {
        bool clash = false;  // injectivity within the source hom-set
        for (int other : c.hom(mor.dom, mor.cod)) {
          if (other < pos && mor_map[other] == cand) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
      }
      mor_map[pos] = cand;
      bool consistent = true;
      for (const Triple& t : triples_of[pos]) {
        if (t.f > pos || t.g > pos || t.h > pos) continue;
        if (d.compose(mor_map[t.f], mor_map[t.g]) != mor_map[t.h]) {
          consistent = false;
          break;
        }
      }
      if (consistent) extend_morphisms(obj_map, mor_map, pos + 1, out);
      mor_map[pos] = -1;
    }
  }

  void start_morphisms(std::vector<int>& obj_map, std::vector<FinFunctor>& out) {
    std::vector<int> mor_map(c.morphism_count(), -1);
    for (int o = 0; o < c.object_count(); ++o)
      mor_map[c.identity_of(o)] = d.identity_of(obj_map[o]);
    extend_morphisms(obj_map, mor_map, c.object_count(), out);
  }

  void extend_objects(std::vector<int>& obj_map, int pos, std::vector<FinFunctor>& out) {
    if (pos == c.object_count()) {
      start_morphisms(obj_map, out);
      return;
    }
    for (int cand = 0; cand < d.object_count(); ++cand) {
      budget.spend();
      obj_map[pos] = cand;
      bool feasible = true;
      for (int prev = 0; prev <= pos && feasible; ++prev)
        feasible = obj_pair_feasible(obj_map, pos, prev) &&
                   obj_pair_feasible(obj_map, prev, pos);
      if (feasible) extend_objects(obj_map, pos + 1, out);
      obj_map[pos] = -1;
    }
  }

  // Full search with the first object's image fixed to `first`.
  std::vector<FinFunctor> run_slice(int first) {
    std::vector<FinFunctor> out;
    std::vector<int> obj_map(c.object_count(), -1);
    budget.spend();
    obj_map[0] = first;
    if (obj_pair_feasible(obj_map, 0, 0)) extend_objects(obj_map, 1, out);
    return out;
  }
};

std::vector<FinFunctor> run_search(const FinCat& c, const FinCat& d, Mode mode,
                                   Budget& budget, const EnumerationOptions& opts) {
  std::vector<FinFunctor> out;
  if (c.object_count() == 0) {
    out.push_back(FinFunctor{&c, &d, {}, {}});
    return out;
  }

  const int slices = d.object_count();
  std::vector<std::vector<FinFunctor>> by_slice(slices);
  const int workers = std::max(1, std::min(opts.workers, slices));

  if (workers == 1) {
    FunctorSearch search(c, d, mode, budget);
    for (int s = 0; s < slices; ++s) by_slice[s] = search.run_slice(s);
  } else {
    std::atomic<bool> exceeded{false};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        FunctorSearch search(c, d, mode, budget);
        for (int s = w; s < slices; s += workers) {
          try {
            by_slice[s] = search.run_slice(s);
          } catch (const BudgetExceeded&) {
            exceeded.store(true);
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (exceeded.load()) throw BudgetExceeded{};
  }

  // Slices are produced in lexicographic order already; concatenation in
  // slice order restores the single-worker order exactly.
  for (auto& slice : by_slice)
    for (auto& f : slice) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(),
            [](const FinFunctor& a, const FinFunctor& b) { return functor_less(a, b); });
  return out;
}

}  // namespace

std::vector<FinFunctor> enumerate_functors(const FinCat& c, const FinCat& d,
                                           Budget& budget,
                                           const EnumerationOptions& opts) {
  return run_search(c, d, Mode::kAll, budget, opts);
}

std::vector<FinFunctor> enumerate_autoequivalences(const FinCat& c, Budget& budget,
                                                   const EnumerationOptions& opts) {
  auto candidates = run_search(c, c, Mode::kFullFaithful, budget, opts);
  std::vector<FinFunctor> out;
  for (auto& f : candidates)
    if (classify_functor(f).equivalence) out.push_back(std::move(f));
  return out;
}

std::vector<FinFunctor> enumerate_automorphisms(const FinCat& c, Budget& budget,
                                                const EnumerationOptions& opts) {
  auto candidates = run_search(c, c, Mode::kFullFaithful, budget, opts);
  std::vector<FinFunctor> out;
  for (auto& f : candidates)
    if (classify_functor(f).isomorphism) out.push_back(std::move(f));
  return out;
}

namespace {

// Backtracking over component families; iso_only additionally restricts the
// candidates to isomorphisms and stops at the first hit.
bool search_nat_trans(const FinFunctor& from, const FinFunctor& to, Budget& budget,
                      bool iso_only, std::vector<NatComponents>* all,
                      NatComponents* first) {
  const FinCat& c = *from.source;
  const FinCat& d = *from.target;
  NatComponents comps(c.object_count(), -1);

  // For incremental checking: morphisms grouped by the larger endpoint, so
  // each square is verified exactly when its second component is placed.
  std::vector<std::vector<int>> check_at(c.object_count());
  for (int i = 0; i < c.morphism_count(); ++i) {
    const auto& mor = c.morphism(i);
    check_at[std::max(mor.dom, mor.cod)].push_back(i);
  }

  std::function<bool(int)> extend = [&](int pos) -> bool {
    if (pos == c.object_count()) {
      if (all) all->push_back(comps);
      if (first) {
        *first = comps;
        return true;
      }
      return false;
    }
    for (int cand : d.hom(from.obj(pos), to.obj(pos))) {
      budget.spend();
      if (iso_only && !d.is_isomorphism(cand)) continue;
      comps[pos] = cand;
      bool natural = true;
      for (int i : check_at[pos]) {
        const auto& mor = c.morphism(i);
        if (d.compose(from.mor(i), comps[mor.cod]) !=
            d.compose(comps[mor.dom], to.mor(i))) {
          natural = false;
          break;
        }
      }
      if (natural && extend(pos + 1)) return true;
      comps[pos] = -1;
    }
    return false;
  };
  return extend(0);
}

}  // namespace

std::vector<NatComponents> enumerate_nat_trans(const FinFunctor& from,
                                               const FinFunctor& to, Budget& budget) {
  std::vector<NatComponents> out;
  search_nat_trans(from, to, budget, /*iso_only=*/false, &out, nullptr);
  return out;
}

std::optional<NatComponents> find_natural_iso(const FinFunctor& from,
                                              const FinFunctor& to, Budget& budget) {
  NatComponents witness;
  if (search_nat_trans(from, to, budget, /*iso_only=*/true, nullptr, &witness))
    return witness;
  return std::nullopt;
}

bool are_naturally_isomorphic(const FinFunctor& f, const FinFunctor& g, Budget& budget) {
  return find_natural_iso(f, g, budget).has_value();
}

}  // namespace fincat

#include "fincat/endo_quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fincat/category.hpp"

namespace fincat {

namespace {

int find_functor_index(const std::vector<FinFunctor>& sorted, const FinFunctor& f) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), f, functor_less);
  if (it == sorted.end() || !(*it == f))
    throw std::logic_error("endo_quotient: composite missing from the enumeration");
  return static_cast<int>(it - sorted.begin());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the least member as root
    parent[b] = a;
  }
};

}  // namespace

EndoMonoidQuotient endo_quotient(const FinCat& c, Budget& budget,
                                 const EnumerationOptions& opts,
                                 const EndoQuotientCaps& caps) {
  if (c.object_count() > caps.max_objects)
    throw CapExceeded("endofunctor quotient: " + std::to_string(c.object_count()) +
                      " objects exceeds the cap of " + std::to_string(caps.max_objects));
  if (c.morphism_count() > caps.max_morphisms)
    throw CapExceeded("endofunctor quotient: " + std::to_string(c.morphism_count()) +
                      " morphisms exceeds the cap of " + std::to_string(caps.max_morphisms));

  EndoMonoidQuotient q;
  q.endofunctors = enumerate_functors(c, c, budget, opts);
  const int n = static_cast<int>(q.endofunctors.size());

  // Naturally isomorphic functors send each object into the same class, so
  // the pointwise class signature buckets the candidates; only pairs inside
  // a bucket need the search.
  std::map<std::vector<int>, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) {
    std::vector<int> sig(c.object_count());
    for (int o = 0; o < c.object_count(); ++o)
      sig[o] = c.iso_classes().class_of[q.endofunctors[i].obj(o)];
    buckets[sig].push_back(i);
  }

  UnionFind uf(n);
  for (const auto& [sig, members] : buckets) {
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        if (uf.find(members[a]) == uf.find(members[b])) continue;
        if (are_naturally_isomorphic(q.endofunctors[members[a]], q.endofunctors[members[b]],
                                     budget))
          uf.unite(members[a], members[b]);
      }
    }
  }

  q.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (q.class_of[root] < 0) {
      q.class_of[root] = static_cast<int>(q.classes.size());
      q.classes.emplace_back();
    }
    q.class_of[i] = q.class_of[root];
    q.classes[q.class_of[i]].push_back(i);
  }

  const int k = q.class_count();
  q.mult.assign(static_cast<size_t>(k) * k, -1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const FinFunctor prod =
          compose_functors(q.endofunctors[q.classes[a][0]], q.endofunctors[q.classes[b][0]]);
      q.mult[a * k + b] = q.class_of[find_functor_index(q.endofunctors, prod)];
    }
  }
  // Well-definedness over every member pair, not just representatives.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const FinFunctor prod = compose_functors(q.endofunctors[i], q.endofunctors[j]);
      if (q.class_of[find_functor_index(q.endofunctors, prod)] !=
          q.mul(q.class_of[i], q.class_of[j]))
        throw std::logic_error("endo_quotient: multiplication is not well-defined");
    }
  }

  q.identity_class = q.class_of[find_functor_index(q.endofunctors, identity_functor(c))];

  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (q.mul(a, b) == q.identity_class && q.mul(b, a) == q.identity_class) {
        q.invertible_classes.push_back(a);
        break;
      }
    }
  }

  for (const FinFunctor& g : enumerate_automorphisms(c, budget, opts)) {
    const int cls = q.class_of[find_functor_index(q.endofunctors, g)];
    if (!std::binary_search(q.aut_image.begin(), q.aut_image.end(), cls))
      q.aut_image.insert(std::upper_bound(q.aut_image.begin(), q.aut_image.end(), cls), cls);
  }

  q.eta_star_surjective = q.aut_image == q.invertible_classes;
  return q;
}

EtaAgreement verify_eta_iff_no_proper(const FinCat& c, Budget& budget,
                                      const EnumerationOptions& opts,
                                      const EndoQuotientCaps& caps) {
  const EndoMonoidQuotient q = endo_quotient(c, budget, opts, caps);
  const ProperResult pr = has_proper_autoequivalence(c, ProperMode::kBoth, budget, opts);
  EtaAgreement out;
  out.eta_surjective = q.eta_star_surjective;
  out.verdict = pr.verdict;
  out.proper_modes_agree = pr.modes_agree;
  out.agree = out.eta_surjective == (pr.verdict == ProperVerdict::kNoProper);
  return out;
}

}  // namespace fincat

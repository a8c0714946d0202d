#include <benchmark/benchmark.h>

#include "fincat/builders.hpp"
#include "fincat/endo_quotient.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/equivalence.hpp"
#include "fincat/preorders.hpp"

namespace {

using namespace fincat;

const FinCat& p4() {
  static CatalogResult r = catalog("p4");
  return r.entry->cat;
}

const FinCat& e3() {
  static CatalogResult r = catalog("e3");
  return r.entry->cat;
}

void bm_autoequivalences_p4(benchmark::State& state) {
  const FinCat& c = p4();
  for (auto _ : state) {
    Budget b(kDefaultBudget);
    auto fs = enumerate_autoequivalences(c, b);
    benchmark::DoNotOptimize(fs);
  }
}
BENCHMARK(bm_autoequivalences_p4);

void bm_endo_quotient_p4(benchmark::State& state) {
  const FinCat& c = p4();
  for (auto _ : state) {
    Budget b(kDefaultBudget);
    auto q = endo_quotient(c, b);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(bm_endo_quotient_p4);

void bm_proper_criterion_preorders3(benchmark::State& state) {
  static std::vector<FinCat> cats = all_preorders_on_3();
  for (auto _ : state) {
    int proper = 0;
    for (const FinCat& c : cats) {
      Budget b(kDefaultBudget);
      ProperResult r = has_proper_autoequivalence(c, ProperMode::kCriterion, b);
      if (r.verdict == ProperVerdict::kProper) ++proper;
    }
    benchmark::DoNotOptimize(proper);
  }
}
BENCHMARK(bm_proper_criterion_preorders3);

void bm_promote_e3_exchange(benchmark::State& state) {
  const FinCat& c = e3();
  FunctorCheck fc = check_functor_ids(c, c, {{"e", "f"}, {"f", "e"}, {"a", "f"}},
                                      {{"e->a", "id:f"}, {"a->e", "id:f"}});
  for (auto _ : state) {
    PromotionResult r = promote_to_isomorphism(*fc.functor);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_promote_e3_exchange);

}  // namespace

BENCHMARK_MAIN();

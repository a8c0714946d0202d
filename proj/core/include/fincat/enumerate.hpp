#pragma once

#include <atomic>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fincat/functor.hpp"

namespace fincat {

/// Thrown when a search exceeds its node budget. Callers report this as a
/// distinct "inconclusive" outcome — never as a partial answer.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search node budget exceeded") {}
};

/// A shared node counter. Each candidate placement in any backtracking
/// search costs one node. Thread-safe; with parallel workers the total for a
/// completed search is worker-count independent (the same tree is visited),
/// and after an overrun used() saturates to limit+1 so reports stay
/// deterministic.
class Budget {
 public:
  explicit Budget(long long limit) : limit_(limit) {}

  void spend(long long n = 1) {
    if (used_.fetch_add(n, std::memory_order_relaxed) + n > limit_)
      throw BudgetExceeded{};
  }

  long long used() const {
    long long u = used_.load(std::memory_order_relaxed);
    return u > limit_ ? limit_ + 1 : u;
  }

  long long limit() const { return limit_; }

 private:
  long long limit_;
  std::atomic<long long> used_{0};
};

inline constexpr long long kDefaultBudget = 1'000'000;

struct EnumerationOptions {
  int workers = 1;  // >1 partitions the first object's image across threads
};

/// All functors C -> D, duplicate-free, in lexicographic (obj_map, mor_map)
/// order. The order and the node count are identical across worker counts.
std::vector<FinFunctor> enumerate_functors(const FinCat& c, const FinCat& d,
                                           Budget& budget,
                                           const EnumerationOptions& opts = {});

/// All autoequivalences of C (faithful, full, essentially surjective), in
/// the same canonical order. Uses hom-set-size pruning, which is complete
/// for full-and-faithful functors.
std::vector<FinFunctor> enumerate_autoequivalences(const FinCat& c, Budget& budget,
                                                   const EnumerationOptions& opts = {});

/// All automorphisms (functors bijective on objects and morphisms).
std::vector<FinFunctor> enumerate_automorphisms(const FinCat& c, Budget& budget,
                                                const EnumerationOptions& opts = {});

/// All natural transformations from -> to, lexicographic in components.
std::vector<NatComponents> enumerate_nat_trans(const FinFunctor& from,
                                               const FinFunctor& to, Budget& budget);

/// First natural isomorphism in canonical order, if any.
std::optional<NatComponents> find_natural_iso(const FinFunctor& from,
                                              const FinFunctor& to, Budget& budget);

bool are_naturally_isomorphic(const FinFunctor& f, const FinFunctor& g, Budget& budget);

}  // namespace fincat

// Acceptance gate: runs the exhaustive self-check battery and prints one
// verdict line per numbered criterion.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "fincat/suite.hpp"

namespace {

const char* kDescriptions[] = {
    nullptr,
    "the retraction onto the skeleton is a certified inner autoequivalence",
    "the skeleton swap on the four-object preorder is a certified proper witness",
    "the exchange endofunctor on the three-object example is proper with the pinned obstruction",
    "every promoted equivalence yields a verified isomorphism and natural isomorphism",
    "the obstruction criterion matches exhaustive search on all small corpus categories",
    "criterion mode and oracle mode agree everywhere",
    "surjectivity onto the invertible classes tracks the proper-autoequivalence verdict",
    "every autoequivalence of the finite-sets example is isomorphic to the identity",
    "the transport pipeline rebuilds each autoequivalence as a genuine automorphism",
    "endomorphism monoids of equal-size objects are isomorphic with a verified witness",
    "reports are byte-deterministic and worker-count independent",
};

}  // namespace

int main() {
  fincat::SuiteResult res = fincat::run_suite(fincat::SuiteScope::kExhaustive3);

  std::map<int, std::vector<const fincat::SuiteCase*>> by_criterion;
  for (const auto& c : res.cases) by_criterion[c.criterion].push_back(&c);

  bool all_ok = true;
  for (int n = 1; n <= 11; ++n) {
    const auto it = by_criterion.find(n);
    const fincat::SuiteCase* first_fail = nullptr;
    if (it != by_criterion.end())
      for (const auto* c : it->second)
        if (!c->passed && first_fail == nullptr) first_fail = c;

    if (it == by_criterion.end()) {
      all_ok = false;
      std::printf("criterion %d: FAIL — %s — no cases executed\n", n,
                  kDescriptions[n]);
    } else if (first_fail != nullptr) {
      all_ok = false;
      std::printf("criterion %d: FAIL — %s — %s: %s\n", n, kDescriptions[n],
                  first_fail->name.c_str(), first_fail->detail.c_str());
    } else {
      std::printf("criterion %d: PASS — %s\n", n, kDescriptions[n]);
    }
  }

  const auto supp = by_criterion.find(0);
  if (supp != by_criterion.end()) {
    for (const auto* c : supp->second) {
      if (!c->passed) {
        all_ok = false;
        std::printf("supplementary: FAIL — %s: %s\n", c->name.c_str(),
                    c->detail.c_str());
      }
    }
  }

  return all_ok ? 0 : 1;
}

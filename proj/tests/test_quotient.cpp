#include <doctest.h>

#include <algorithm>

#include "fincat/builders.hpp"
#include "fincat/endo_quotient.hpp"
#include "fincat/enumerate.hpp"

using namespace fincat;

namespace {

EndoMonoidQuotient quotient_of(const char* name) {
  CatalogResult r = catalog(name);
  REQUIRE(r.entry);
  Budget b(kDefaultBudget);
  return endo_quotient(r.entry->cat, b);
}

void check_monoid_laws(const EndoMonoidQuotient& q) {
  int n = q.class_count();
  REQUIRE(q.identity_class >= 0);
  REQUIRE(q.identity_class < n);
  for (int k = 0; k < n; ++k) {
    CHECK(q.mul(q.identity_class, k) == k);
    CHECK(q.mul(k, q.identity_class) == k);
  }
  for (std::size_t i = 0; i < q.endofunctors.size(); ++i) {
    int cls = q.class_of[static_cast<int>(i)];
    const std::vector<int>& members = q.classes[cls];
    CHECK(std::find(members.begin(), members.end(), static_cast<int>(i)) !=
          members.end());
  }
  for (int cls : q.aut_image) {
    CHECK(std::binary_search(q.invertible_classes.begin(),
                             q.invertible_classes.end(), cls));
  }
}

}  // namespace

TEST_CASE("p4 endomorphism quotient") {
  EndoMonoidQuotient q = quotient_of("p4");
  CHECK(q.endofunctors.size() == 41);
  CHECK(q.class_count() == 11);
  CHECK(q.invertible_classes.size() == 2);
  CHECK(q.aut_image.size() == 1);
  CHECK_FALSE(q.eta_star_surjective);
  check_monoid_laws(q);
}

TEST_CASE("e3 endomorphism quotient") {
  EndoMonoidQuotient q = quotient_of("e3");
  CHECK(q.endofunctors.size() == 15);
  CHECK(q.class_count() == 4);
  CHECK(q.invertible_classes.size() == 2);
  CHECK(q.aut_image.size() == 1);
  CHECK_FALSE(q.eta_star_surjective);
  check_monoid_laws(q);
}

TEST_CASE("discrete:2 endomorphism quotient") {
  EndoMonoidQuotient q = quotient_of("discrete:2");
  CHECK(q.endofunctors.size() == 4);
  CHECK(q.class_count() == 4);
  CHECK(q.invertible_classes.size() == 2);
  CHECK(q.aut_image.size() == 2);
  CHECK(q.eta_star_surjective);
  check_monoid_laws(q);
}

TEST_CASE("isopair endomorphism quotient collapses to a point") {
  EndoMonoidQuotient q = quotient_of("isopair");
  CHECK(q.endofunctors.size() == 4);
  CHECK(q.class_count() == 1);
  CHECK(q.invertible_classes.size() == 1);
  CHECK(q.aut_image.size() == 1);
  CHECK(q.eta_star_surjective);
  check_monoid_laws(q);
}

TEST_CASE("quotient caps guard the search") {
  CatalogResult p4 = catalog("p4");
  Budget b(kDefaultBudget);
  CHECK_THROWS_AS(endo_quotient(p4.entry->cat, b, {}, EndoQuotientCaps{2, 16}),
                  CapExceeded);

  CatalogResult fs = catalog("finset:1,2,2");
  Budget b2(kDefaultBudget);
  CHECK_THROWS_AS(endo_quotient(fs.entry->cat, b2), CapExceeded);
}

TEST_CASE("surjectivity agrees with the proper verdict") {
  CatalogResult p4 = catalog("p4");
  Budget b(kDefaultBudget);
  EtaAgreement a = verify_eta_iff_no_proper(p4.entry->cat, b);
  CHECK_FALSE(a.eta_surjective);
  CHECK(a.verdict == ProperVerdict::kProper);
  CHECK(a.proper_modes_agree);
  CHECK(a.agree);

  CatalogResult d2 = catalog("discrete:2");
  Budget b2(kDefaultBudget);
  EtaAgreement a2 = verify_eta_iff_no_proper(d2.entry->cat, b2);
  CHECK(a2.eta_surjective);
  CHECK(a2.verdict == ProperVerdict::kNoProper);
  CHECK(a2.agree);
}

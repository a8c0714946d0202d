#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/concrete.hpp"

namespace fincat {

inline constexpr int kDefaultFinsetMorphismCap = 500;

struct PreorderResult {
  std::optional<FinCat> category;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// The category of a preorder: one morphism "x->y" per related pair of
/// distinct elements, identities for the loops, composition forced by
/// uniqueness. With close=true, the reflexive-transitive closure of the
/// given pairs is taken first; with close=false, the pairs must already
/// form a preorder.
PreorderResult from_preorder(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             bool close);

struct CatalogEntry {
  FinCat cat;
  std::optional<ConcreteData> concrete;  // engaged for finset entries
};

struct CatalogResult {
  std::optional<CatalogEntry> entry;
  std::string error;
  bool cap_exceeded = false;
};

/// Named example categories (case-insensitive):
///   p4            four-element preorder a->b, a->c<->d, closed
///   e3            two incomparable elements e,f plus a new element a with
///                 a<->e, closed
///   discrete:N    N objects, identities only
///   isopair       two isomorphic objects x <-> y
///   finset:a,b,c  concrete category of finite sets of the given sizes with
///                 all maps as morphisms (brackets around the list allowed)
CatalogResult catalog(const std::string& name,
                      int finset_morphism_cap = kDefaultFinsetMorphismCap);

}  // namespace fincat

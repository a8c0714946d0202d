#include "fincat/category.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fincat {

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) out << v.law << ": " << v.detail << "\n";
  return out.str();
}

int FinCat::find_object(std::string_view id) const {
  auto it = object_index_.find(std::string(id));
  return it == object_index_.end() ? -1 : it->second;
}

int FinCat::find_morphism(std::string_view id) const {
  auto it = morphism_index_.find(std::string(id));
  return it == morphism_index_.end() ? -1 : it->second;
}

std::vector<int> FinCat::nonidentity_morphisms() const {
  std::vector<int> out;
  for (int m = object_count(); m < morphism_count(); ++m) out.push_back(m);
  return out;
}

// Internal handle used to fill in the private fields of FinCat.
struct CategoryBuilder {
  static FinCat build(std::vector<std::string> objects,
                      std::vector<FinCat::Morphism> morphisms,
                      std::vector<int> compose) {
    FinCat cat;
    cat.objects_ = std::move(objects);
    cat.morphisms_ = std::move(morphisms);
    cat.compose_ = std::move(compose);

    const int n = cat.object_count();
    const int m = cat.morphism_count();

    cat.identity_.resize(n);
    for (int o = 0; o < n; ++o) cat.identity_[o] = o;

    for (int o = 0; o < n; ++o) cat.object_index_[cat.objects_[o]] = o;
    for (int i = 0; i < m; ++i) cat.morphism_index_[cat.morphisms_[i].id] = i;

    cat.hom_.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < m; ++i) {
      const auto& mor = cat.morphisms_[i];
      cat.hom_[mor.dom * n + mor.cod].push_back(i);
    }

    // Two-sided inverses. A morphism has at most one: if g and g' both
    // invert f, then g = g (f g') = (g f) g' = g'.
    cat.inverse_.assign(m, -1);
    for (int f = 0; f < m; ++f) {
      const auto& mf = cat.morphisms_[f];
      for (int g : cat.hom_[mf.cod * n + mf.dom]) {
        if (cat.compose(f, g) == cat.identity_[mf.dom] &&
            cat.compose(g, f) == cat.identity_[mf.cod]) {
          cat.inverse_[f] = g;
          break;
        }
      }
    }

    // Isomorphism classes via union-find over the iso edges.
    std::vector<int> parent(n);
    for (int o = 0; o < n; ++o) parent[o] = o;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int f = 0; f < m; ++f) {
      if (cat.inverse_[f] < 0) continue;
      int a = find(cat.morphisms_[f].dom);
      int b = find(cat.morphisms_[f].cod);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    cat.classes_.class_of.assign(n, -1);
    for (int o = 0; o < n; ++o) {
      int root = find(o);
      if (cat.classes_.class_of[root] < 0) {
        cat.classes_.class_of[root] = static_cast<int>(cat.classes_.classes.size());
        cat.classes_.classes.emplace_back();
      }
      cat.classes_.class_of[o] = cat.classes_.class_of[root];
      cat.classes_.classes[cat.classes_.class_of[o]].push_back(o);
    }
    return cat;
  }
};

namespace {

bool starts_with_identity_prefix(const std::string& id) {
  return id.rfind(kIdentityPrefix, 0) == 0;
}

}  // namespace

CategoryValidation validate_category(const RawCategory& raw) {
  ValidationReport report;
  auto flag = [&](std::string law, std::string detail) {
    report.violations.push_back({std::move(law), std::move(detail)});
  };

  // --- Identifier hygiene -------------------------------------------------
  {
    std::set<std::string> seen;
    for (const auto& o : raw.objects) {
      if (o.empty()) flag("empty-id", "object with empty id");
      if (!seen.insert(o).second) flag("duplicate-id", "object '" + o + "'");
    }
  }
  {
    std::set<std::string> seen;
    for (const auto& mor : raw.morphisms) {
      if (mor.id.empty()) flag("empty-id", "morphism with empty id");
      if (starts_with_identity_prefix(mor.id))
        flag("reserved-id", "morphism '" + mor.id + "' uses the reserved 'id:' prefix");
      if (!seen.insert(mor.id).second) flag("duplicate-id", "morphism '" + mor.id + "'");
    }
  }

  std::unordered_map<std::string, int> obj_of;
  for (int i = 0; i < static_cast<int>(raw.objects.size()); ++i)
    obj_of.emplace(raw.objects[i], i);

  for (const auto& mor : raw.morphisms) {
    if (!obj_of.count(mor.dom))
      flag("dangling-ref", "morphism '" + mor.id + "' has unknown dom '" + mor.dom + "'");
    if (!obj_of.count(mor.cod))
      flag("dangling-ref", "morphism '" + mor.id + "' has unknown cod '" + mor.cod + "'");
  }

  if (!report.ok()) return {std::nullopt, std::move(report)};

  // --- Assemble the full morphism list: identities first ------------------
  const int n = static_cast<int>(raw.objects.size());
  std::vector<FinCat::Morphism> morphisms;
  morphisms.reserve(n + raw.morphisms.size());
  for (int o = 0; o < n; ++o)
    morphisms.push_back({std::string(kIdentityPrefix) + raw.objects[o], o, o});
  for (const auto& mor : raw.morphisms)
    morphisms.push_back({mor.id, obj_of.at(mor.dom), obj_of.at(mor.cod)});
  const int m = static_cast<int>(morphisms.size());

  std::unordered_map<std::string, int> mor_of;
  for (int i = 0; i < m; ++i) mor_of.emplace(morphisms[i].id, i);

  // --- Composition table ---------------------------------------------------
  std::vector<int> table(static_cast<size_t>(m) * m, -1);

  // Identity compositions are implied, never spelled out in input.
  for (int f = 0; f < m; ++f) {
    table[morphisms[f].dom * m + f] = f;        // id_dom then f
    table[static_cast<size_t>(f) * m + morphisms[f].cod] = f;  // f then id_cod
  }

  for (const auto& c : raw.compose) {
    auto fi = mor_of.find(c.f);
    auto gi = mor_of.find(c.g);
    auto hi = mor_of.find(c.h);
    if (fi == mor_of.end() || gi == mor_of.end() || hi == mor_of.end()) {
      flag("dangling-ref", "compose entry (" + c.f + ", " + c.g + ", " + c.h +
                               ") names an unknown morphism");
      continue;
    }
    const int f = fi->second, g = gi->second, h = hi->second;
    const auto& mf = morphisms[f];
    const auto& mg = morphisms[g];
    const auto& mh = morphisms[h];
    if (mf.cod != mg.dom) {
      flag("not-composable", "(" + c.f + ", " + c.g + "): cod(" + c.f +
                                 ") != dom(" + c.g + ")");
      continue;
    }
    if (mh.dom != mf.dom || mh.cod != mg.cod) {
      flag("ill-typed-composite", "(" + c.f + ", " + c.g + ") -> " + c.h +
                                      ": endpoints do not match");
      continue;
    }
    int& slot = table[static_cast<size_t>(f) * m + g];
    if (slot >= 0 && slot != h) {
      flag("conflicting-composite",
           "(" + c.f + ", " + c.g + ") given as both '" + morphisms[slot].id +
               "' and '" + c.h + "'");
      continue;
    }
    slot = h;
  }

  // --- Totality -------------------------------------------------------------
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (morphisms[f].cod != morphisms[g].dom) continue;
      if (table[static_cast<size_t>(f) * m + g] < 0)
        flag("missing-composite",
             "(" + morphisms[f].id + ", " + morphisms[g].id + ") has no composite");
    }
  }

  if (!report.ok()) return {std::nullopt, std::move(report)};

  // --- Identity laws (synthesized entries could be overridden by input) ----
  for (int f = 0; f < m; ++f) {
    if (table[morphisms[f].dom * m + f] != f)
      flag("identity", "id then " + morphisms[f].id + " != " + morphisms[f].id);
    if (table[static_cast<size_t>(f) * m + morphisms[f].cod] != f)
      flag("identity", morphisms[f].id + " then id != " + morphisms[f].id);
  }

  // --- Associativity over every composable triple --------------------------
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (morphisms[f].cod != morphisms[g].dom) continue;
      const int fg = table[static_cast<size_t>(f) * m + g];
      for (int h = 0; h < m; ++h) {
        if (morphisms[g].cod != morphisms[h].dom) continue;
        const int gh = table[static_cast<size_t>(g) * m + h];
        if (table[static_cast<size_t>(fg) * m + h] !=
            table[static_cast<size_t>(f) * m + gh])
          flag("associativity", "(" + morphisms[f].id + ", " + morphisms[g].id +
                                    ", " + morphisms[h].id + ")");
      }
    }
  }

  if (!report.ok()) return {std::nullopt, std::move(report)};

  return {CategoryBuilder::build(raw.objects, std::move(morphisms), std::move(table)),
          std::move(report)};
}

}  // namespace fincat

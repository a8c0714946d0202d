#include "fincat/builders.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace fincat {

namespace {

std::string arrow_id(const std::string& x, const std::string& y) {
  return x + "->" + y;
}

}  // namespace

PreorderResult from_preorder(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             bool close) {
  PreorderResult out;
  auto flag = [&](std::string law, std::string detail) {
    out.violations.push_back({std::move(law), std::move(detail)});
  };

  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second)
      flag("duplicate-id", "element '" + elements[i] + "'");
  }

  std::vector<bool> rel(static_cast<size_t>(n) * n, false);
  for (const auto& [x, y] : pairs) {
    auto xi = index.find(x);
    auto yi = index.find(y);
    if (xi == index.end() || yi == index.end()) {
      flag("dangling-ref", "pair (" + x + ", " + y + ") mentions an unknown element");
      continue;
    }
    rel[xi->second * n + yi->second] = true;
  }
  if (!out.ok()) return out;

  if (close) {
    for (int i = 0; i < n; ++i) rel[i * n + i] = true;
    // Warshall closure.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (rel[i * n + k])
          for (int j = 0; j < n; ++j)
            if (rel[k * n + j]) rel[i * n + j] = true;
  } else {
    for (int i = 0; i < n; ++i)
      if (!rel[i * n + i]) flag("not-a-preorder", "missing loop at '" + elements[i] + "'");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (rel[i * n + k])
          for (int j = 0; j < n; ++j)
            if (rel[k * n + j] && !rel[i * n + j])
              flag("not-a-preorder", "missing composite pair (" + elements[i] + ", " +
                                         elements[j] + ")");
    if (!out.ok()) return out;
  }

  RawCategory raw;
  raw.objects = elements;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rel[i * n + j])
        raw.morphisms.push_back({arrow_id(elements[i], elements[j]), elements[i],
                                 elements[j]});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !rel[i * n + j]) continue;
      for (int k = 0; k < n; ++k) {
        if (j == k || !rel[j * n + k]) continue;
        const std::string h =
            i == k ? std::string(kIdentityPrefix) + elements[i] : arrow_id(elements[i], elements[k]);
        raw.compose.push_back({arrow_id(elements[i], elements[j]),
                               arrow_id(elements[j], elements[k]), h});
      }
    }

  auto validated = validate_category(raw);
  if (!validated.report.ok()) {
    out.violations = std::move(validated.report.violations);
    return out;
  }
  out.category = std::move(*validated.category);
  return out;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

CatalogResult fail(std::string error, bool cap = false) {
  CatalogResult out;
  out.error = std::move(error);
  out.cap_exceeded = cap;
  return out;
}

CatalogResult make_discrete(int n) {
  RawCategory raw;
  for (int i = 0; i < n; ++i) raw.objects.push_back("o" + std::to_string(i + 1));
  auto validated = validate_category(raw);
  CatalogResult out;
  out.entry = CatalogEntry{std::move(*validated.category), std::nullopt};
  return out;
}

// The concrete category of finite sets of the given sizes: object "s<k>"
// carries labels "s<k>.1" .. "s<k>.<size>", morphisms are all maps encoded
// as "sA->sB/<image digits>" (1-based positions), identities implicit.
CatalogResult make_finset(const std::vector<int>& sizes, int morphism_cap) {
  const int n = static_cast<int>(sizes.size());
  long long total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      long long maps = 1;
      for (int e = 0; e < sizes[a]; ++e) {
        maps *= sizes[b];
        if (maps > morphism_cap) break;
      }
      total += maps;
      if (total > morphism_cap)
        return fail("finset morphism count exceeds the cap of " +
                        std::to_string(morphism_cap),
                    /*cap=*/true);
    }

  RawCategory raw;
  ConcreteData data;
  std::vector<std::string> obj_ids(n);
  for (int i = 0; i < n; ++i) {
    obj_ids[i] = "s" + std::to_string(i + 1);
    raw.objects.push_back(obj_ids[i]);
  }

  // All non-identity maps, per ordered object pair, in lexicographic order
  // of their image tuples; remember each map to fill compose and mor_fn.
  struct MapEntry {
    std::string id;
    int dom, cod;
    std::vector<int> image;  // 0-based positions in cod
  };
  std::vector<MapEntry> maps;
  std::unordered_map<std::string, std::string> id_of_tuple;  // dom,cod,tuple -> id
  auto tuple_key = [](int a, int b, const std::vector<int>& image) {
    std::string key = std::to_string(a) + "|" + std::to_string(b) + "|";
    for (int v : image) key += std::to_string(v) + ",";
    return key;
  };

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> image(sizes[a], 0);
      while (true) {
        bool is_identity = a == b;
        for (int e = 0; e < sizes[a] && is_identity; ++e)
          if (image[e] != e) is_identity = false;
        std::string id;
        if (is_identity) {
          id = std::string(kIdentityPrefix) + obj_ids[a];
        } else {
          id = obj_ids[a] + "->" + obj_ids[b] + "/";
          for (int v : image) id += std::to_string(v + 1);
          raw.morphisms.push_back({id, obj_ids[a], obj_ids[b]});
          maps.push_back({id, a, b, image});
        }
        id_of_tuple[tuple_key(a, b, image)] = id;

        int pos = sizes[a] - 1;
        while (pos >= 0 && image[pos] == sizes[b] - 1) image[pos--] = 0;
        if (pos < 0) break;
        ++image[pos];
      }
    }
  }

  for (const auto& f : maps) {
    for (const auto& g : maps) {
      if (f.cod != g.dom) continue;
      std::vector<int> image(f.image.size());
      for (size_t e = 0; e < image.size(); ++e) image[e] = g.image[f.image[e]];
      raw.compose.push_back({f.id, g.id, id_of_tuple.at(tuple_key(f.dom, g.cod, image))});
    }
  }

  auto validated = validate_category(raw);
  if (!validated.report.ok())
    return fail("internal error building finset: " + validated.report.to_string());
  FinCat cat = std::move(*validated.category);

  data.labels.resize(n);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < sizes[i]; ++e)
      data.labels[i].push_back(obj_ids[i] + "." + std::to_string(e + 1));
  data.mor_fn.resize(cat.morphism_count());
  for (int i = 0; i < cat.morphism_count(); ++i) {
    if (cat.is_identity(i)) {
      data.mor_fn[i].resize(sizes[cat.morphism(i).dom]);
      for (size_t e = 0; e < data.mor_fn[i].size(); ++e)
        data.mor_fn[i][e] = static_cast<int>(e);
    }
  }
  for (const auto& f : maps) data.mor_fn[cat.find_morphism(f.id)] = f.image;

  CatalogResult out;
  out.entry = CatalogEntry{std::move(cat), std::move(data)};
  return out;
}

}  // namespace

CatalogResult catalog(const std::string& name, int finset_morphism_cap) {
  const std::string key = lower(name);

  if (key == "p4") {
    auto built = from_preorder({"a", "b", "c", "d"},
                               {{"a", "b"}, {"a", "c"}, {"c", "d"}, {"d", "c"}}, true);
    CatalogResult out;
    out.entry = CatalogEntry{std::move(*built.category), std::nullopt};
    return out;
  }
  if (key == "e3") {
    auto built = from_preorder({"e", "f", "a"}, {{"e", "a"}, {"a", "e"}}, true);
    CatalogResult out;
    out.entry = CatalogEntry{std::move(*built.category), std::nullopt};
    return out;
  }
  if (key == "isopair") {
    auto built = from_preorder({"x", "y"}, {{"x", "y"}, {"y", "x"}}, true);
    CatalogResult out;
    out.entry = CatalogEntry{std::move(*built.category), std::nullopt};
    return out;
  }
  if (key.rfind("discrete:", 0) == 0) {
    const std::string arg = key.substr(9);
    try {
      size_t used = 0;
      int n = std::stoi(arg, &used);
      if (used != arg.size() || n < 0 || n > 10000)
        return fail("discrete size out of range: '" + arg + "'");
      return make_discrete(n);
    } catch (const std::exception&) {
      return fail("bad discrete size: '" + arg + "'");
    }
  }
  if (key.rfind("finset:", 0) == 0) {
    std::string arg = key.substr(7);
    arg.erase(std::remove_if(arg.begin(), arg.end(),
                             [](char c) { return c == '[' || c == ']'; }),
              arg.end());
    std::vector<int> sizes;
    size_t start = 0;
    while (start <= arg.size()) {
      size_t comma = arg.find(',', start);
      std::string piece = arg.substr(start, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - start);
      try {
        size_t used = 0;
        int s = std::stoi(piece, &used);
        if (used != piece.size() || s < 1) return fail("bad finset size: '" + piece + "'");
        sizes.push_back(s);
      } catch (const std::exception&) {
        return fail("bad finset size: '" + piece + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (sizes.empty()) return fail("finset needs at least one size");
    return make_finset(sizes, finset_morphism_cap);
  }
  return fail("unknown catalog name: '" + name + "'");
}

}  // namespace fincat

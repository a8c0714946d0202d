#include "fincat/json_io.hpp"

#include <json.hpp>
#include <map>
#include <openssl/evp.h>
#include <sstream>
#include <utility>

#include "fincat/builders.hpp"

namespace fincat {

using nlohmann::json;

namespace {

bool string_array(const json& v, std::vector<std::string>& out) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (!e.is_string()) return false;
    out.push_back(e.get<std::string>());
  }
  return true;
}

bool string_map(const json& v, std::map<std::string, std::string>& out) {
  if (!v.is_object()) return false;
  for (const auto& item : v.items()) {
    if (!item.value().is_string()) return false;
    out[item.key()] = item.value().get<std::string>();
  }
  return true;
}

}  // namespace

LoadedCategory load_category_text(const std::string& text) {
  LoadedCategory out;
  auto fail = [&](std::string law, std::string detail) {
    out.violations.push_back({std::move(law), std::move(detail)});
  };

  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail("json-parse", e.what());
    return out;
  }
  if (!j.is_object()) {
    fail("json-shape", "top level must be an object");
    return out;
  }
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "format_version" && k != "objects" && k != "morphisms" && k != "compose" &&
        k != "preorder" && k != "underlying" && k != "mor_fn")
      fail("unknown-key", k);
  }
  if (!j.contains("format_version"))
    fail("format-version", "missing");
  else if (!j["format_version"].is_number_integer() ||
           j["format_version"].get<long long>() != 1)
    fail("format-version", "must be the integer 1");

  const bool explicit_form =
      j.contains("objects") || j.contains("morphisms") || j.contains("compose");
  const bool preorder_form = j.contains("preorder");
  if (explicit_form && preorder_form)
    fail("input-shape", "objects/morphisms/compose and preorder are mutually exclusive");
  if (!explicit_form && !preorder_form)
    fail("input-shape", "either objects or a preorder block is required");
  if (j.contains("mor_fn") && !j.contains("underlying"))
    fail("input-shape", "mor_fn requires underlying");
  if (!out.violations.empty()) return out;

  std::optional<FinCat> cat;
  if (preorder_form) {
    const json& p = j["preorder"];
    if (!p.is_object()) {
      fail("json-type", "preorder must be an object");
      return out;
    }
    for (const auto& item : p.items())
      if (item.key() != "elements" && item.key() != "le" && item.key() != "close")
        fail("unknown-key", "preorder." + item.key());
    std::vector<std::string> elements;
    if (!p.contains("elements") || !string_array(p["elements"], elements))
      fail("json-type", "preorder.elements must be an array of strings");
    std::vector<std::pair<std::string, std::string>> pairs;
    if (p.contains("le")) {
      if (!p["le"].is_array()) fail("json-type", "preorder.le must be an array of pairs");
      else
        for (const auto& e : p["le"]) {
          if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            fail("json-type", "preorder.le entries must be [string, string]");
            break;
          }
          pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    bool close = false;
    if (p.contains("close")) {
      if (!p["close"].is_boolean()) fail("json-type", "preorder.close must be a boolean");
      else close = p["close"].get<bool>();
    }
    if (!out.violations.empty()) return out;
    PreorderResult built = from_preorder(elements, pairs, close);
    if (!built.ok()) {
      for (auto& v : built.violations) out.violations.push_back(std::move(v));
      return out;
    }
    cat = std::move(built.category);
  } else {
    RawCategory raw;
    if (!j.contains("objects") || !string_array(j["objects"], raw.objects))
      fail("json-type", "objects must be an array of strings");
    if (j.contains("morphisms")) {
      if (!j["morphisms"].is_array()) fail("json-type", "morphisms must be an array");
      else
        for (const auto& e : j["morphisms"]) {
          if (!e.is_object() || e.size() != 3 || !e.contains("id") || !e.contains("dom") ||
              !e.contains("cod") || !e["id"].is_string() || !e["dom"].is_string() ||
              !e["cod"].is_string()) {
            fail("json-type", "each morphism must be {\"id\",\"dom\",\"cod\"} with string values");
            break;
          }
          raw.morphisms.push_back({e["id"].get<std::string>(), e["dom"].get<std::string>(),
                                   e["cod"].get<std::string>()});
        }
    }
    if (j.contains("compose")) {
      if (!j["compose"].is_array()) fail("json-type", "compose must be an array");
      else
        for (const auto& e : j["compose"]) {
          if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
              !e[2].is_string()) {
            fail("json-type", "each compose entry must be [f, g, h] with string ids");
            break;
          }
          raw.compose.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                                 e[2].get<std::string>()});
        }
    }
    if (!out.violations.empty()) return out;
    CategoryValidation validated = validate_category(raw);
    if (!validated.report.ok()) {
      out.violations = std::move(validated.report.violations);
      return out;
    }
    cat = std::move(validated.category);
  }

  if (j.contains("underlying")) {
    const json& u = j["underlying"];
    std::map<std::string, std::vector<std::string>> underlying;
    if (!u.is_object()) fail("json-type", "underlying must be an object");
    else
      for (const auto& item : u.items()) {
        std::vector<std::string> labels;
        if (!string_array(item.value(), labels)) {
          fail("json-type", "underlying." + item.key() + " must be an array of strings");
          break;
        }
        underlying[item.key()] = std::move(labels);
      }
    std::map<std::string, std::map<std::string, std::string>> fns;
    if (j.contains("mor_fn")) {
      const json& f = j["mor_fn"];
      if (!f.is_object()) fail("json-type", "mor_fn must be an object");
      else
        for (const auto& item : f.items()) {
          std::map<std::string, std::string> fn;
          if (!string_map(item.value(), fn)) {
            fail("json-type", "mor_fn." + item.key() + " must map labels to labels");
            break;
          }
          fns[item.key()] = std::move(fn);
        }
    }
    if (!out.violations.empty()) return out;
    ConcreteValidation cv = validate_concrete(*cat, underlying, fns);
    if (!cv.ok()) {
      out.violations = std::move(cv.violations);
      return out;
    }
    out.concrete = std::move(cv.data);
  }

  out.category = std::move(cat);
  return out;
}

LoadedFunctor load_functor_text(const std::string& text, const FinCat& source,
                                const FinCat& target) {
  LoadedFunctor out;
  auto fail = [&](std::string law, std::string detail) {
    out.violations.push_back({std::move(law), std::move(detail)});
  };

  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail("json-parse", e.what());
    return out;
  }
  if (!j.is_object()) {
    fail("json-shape", "top level must be an object");
    return out;
  }
  for (const auto& item : j.items())
    if (item.key() != "format_version" && item.key() != "obj_map" && item.key() != "mor_map")
      fail("unknown-key", item.key());
  if (!j.contains("format_version"))
    fail("format-version", "missing");
  else if (!j["format_version"].is_number_integer() ||
           j["format_version"].get<long long>() != 1)
    fail("format-version", "must be the integer 1");

  std::map<std::string, std::string> obj_map;
  if (!j.contains("obj_map") || !string_map(j["obj_map"], obj_map))
    fail("json-type", "obj_map must map object ids to object ids");
  std::map<std::string, std::string> mor_map;
  if (j.contains("mor_map") && !string_map(j["mor_map"], mor_map))
    fail("json-type", "mor_map must map morphism ids to morphism ids");
  if (!out.violations.empty()) return out;

  FunctorCheck checked = check_functor_ids(source, target, obj_map, mor_map);
  if (!checked.ok()) {
    out.violations = std::move(checked.violations);
    return out;
  }
  out.functor = std::move(checked.functor);
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string input_digest(const std::vector<std::string>& inputs) {
  std::string all;
  for (const auto& s : inputs) all += s;
  return "sha256:" + sha256_hex(all);
}

std::string category_json(const FinCat& c, const ConcreteData* concrete) {
  json j;
  j["format_version"] = 1;
  json objs = json::array();
  for (int o = 0; o < c.object_count(); ++o) objs.push_back(c.object_id(o));
  j["objects"] = std::move(objs);

  const std::vector<int> nonid = c.nonidentity_morphisms();
  json mors = json::array();
  for (int i : nonid) {
    const auto& m = c.morphism(i);
    json e;
    e["id"] = m.id;
    e["dom"] = c.object_id(m.dom);
    e["cod"] = c.object_id(m.cod);
    mors.push_back(std::move(e));
  }
  j["morphisms"] = std::move(mors);

  json comp = json::array();
  for (int f : nonid)
    for (int g : nonid) {
      const int h = c.compose(f, g);
      if (h >= 0)
        comp.push_back(json::array({c.morphism(f).id, c.morphism(g).id, c.morphism(h).id}));
    }
  j["compose"] = std::move(comp);

  if (concrete != nullptr) {
    json u = json::object();
    for (int o = 0; o < c.object_count(); ++o) u[c.object_id(o)] = concrete->labels[o];
    j["underlying"] = std::move(u);
    json fns = json::object();
    for (int i : nonid) {
      const auto& m = c.morphism(i);
      json fn = json::object();
      for (size_t p = 0; p < concrete->mor_fn[i].size(); ++p)
        fn[concrete->labels[m.dom][p]] = concrete->labels[m.cod][concrete->mor_fn[i][p]];
      fns[m.id] = std::move(fn);
    }
    j["mor_fn"] = std::move(fns);
  }
  return j.dump(2) + "\n";
}

std::string functor_json(const FinFunctor& f) {
  json j;
  j["format_version"] = 1;
  json om = json::object();
  for (int o = 0; o < f.source->object_count(); ++o)
    om[f.source->object_id(o)] = f.target->object_id(f.obj(o));
  j["obj_map"] = std::move(om);
  json mm = json::object();
  for (int i : f.source->nonidentity_morphisms())
    mm[f.source->morphism(i).id] = f.target->morphism(f.mor(i)).id;
  j["mor_map"] = std::move(mm);
  return j.dump();
}

std::string functor_list_json(const std::vector<FinFunctor>& fs) {
  json j;
  j["count"] = static_cast<int>(fs.size());
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(json::parse(functor_json(f)));
  j["functors"] = std::move(arr);
  return j.dump();
}

std::string validate_json(const FinCat* c, const ConcreteData* concrete,
                          const std::vector<Violation>& violations) {
  json j;
  j["valid"] = violations.empty() && c != nullptr;
  j["violations"] = json::parse(violations_json(violations));
  if (c != nullptr) {
    j["objects"] = c->object_count();
    j["morphisms"] = c->morphism_count();
    json sizes = json::array();
    for (const auto& cls : c->iso_classes().classes)
      sizes.push_back(static_cast<int>(cls.size()));
    j["class_sizes"] = std::move(sizes);
    j["concrete"] = concrete != nullptr;
  }
  return j.dump();
}

std::string components_json(const FinCat& source, const FinCat& target,
                            const NatComponents& comps) {
  json c = json::object();
  for (int o = 0; o < source.object_count(); ++o)
    c[source.object_id(o)] = target.morphism(comps[o]).id;
  json j;
  j["components"] = std::move(c);
  return j.dump();
}

std::string violations_json(const std::vector<Violation>& violations) {
  json arr = json::array();
  for (const auto& v : violations) {
    json e;
    e["law"] = v.law;
    e["detail"] = v.detail;
    arr.push_back(std::move(e));
  }
  return arr.dump();
}

std::string obstructions_json(const FinCat& source, const FinCat& target,
                              const std::vector<Obstruction>& obs) {
  json arr = json::array();
  for (const auto& o : obs)
    arr.push_back(json::array({source.object_id(o.x_obj), target.object_id(o.y_obj),
                               o.x_class_size, o.y_class_size}));
  return arr.dump();
}

std::string skeleton_json(const SkeletonData& s) {
  const FinCat& c = *s.base;
  json j;
  json reps = json::array();
  for (int r : s.representatives) reps.push_back(c.object_id(r));
  j["representatives"] = std::move(reps);
  json u = json::object();
  for (int o = 0; o < c.object_count(); ++o) u[c.object_id(o)] = c.morphism(s.u[o]).id;
  j["u"] = std::move(u);
  j["nu"] = json::parse(functor_json(s.nu));
  return j.dump();
}

std::string promotion_json(const FinFunctor& pi, const PromotionResult& r) {
  json j;
  j["outcome"] = r.promoted() ? "promoted" : "obstructed";
  j["phi"] = r.promoted() ? json::parse(functor_json(*r.phi)) : json(nullptr);
  j["tau"] = r.promoted() ? json::parse(components_json(*pi.source, *pi.target, r.tau))
                          : json(nullptr);
  j["obstructions"] = json::parse(obstructions_json(*pi.source, *pi.target, r.obstructions));
  return j.dump();
}

std::string proper_json(const FinCat& c, const ProperResult& r) {
  json j;
  j["verdict"] = r.verdict == ProperVerdict::kProper ? "proper" : "no-proper";
  j["witness"] = r.witness ? json::parse(functor_json(*r.witness)) : json(nullptr);
  j["obstructions"] = json::parse(obstructions_json(c, c, r.witness_obstructions));
  if (r.criterion_verdict || r.oracle_verdict) {
    json m = json::object();
    auto str = [](ProperVerdict v) {
      return v == ProperVerdict::kProper ? "proper" : "no-proper";
    };
    if (r.criterion_verdict) m["criterion"] = str(*r.criterion_verdict);
    if (r.oracle_verdict) m["oracle"] = str(*r.oracle_verdict);
    if (r.criterion_verdict && r.oracle_verdict) m["agree"] = r.modes_agree;
    j["modes"] = std::move(m);
  }
  return j.dump();
}

std::string inconclusive_proper_json() {
  json j;
  j["verdict"] = "inconclusive";
  j["witness"] = json(nullptr);
  j["obstructions"] = json::array();
  return j.dump();
}

std::string quotient_json(const EndoMonoidQuotient& q) {
  json j;
  j["end0_size"] = q.class_count();
  j["aut0_size"] = static_cast<int>(q.invertible_classes.size());
  j["eta_star_surjective"] = q.eta_star_surjective;
  json reps = json::array();
  for (const auto& cls : q.classes)
    reps.push_back(json::parse(functor_json(q.endofunctors[cls[0]])));
  j["class_reps"] = std::move(reps);
  return j.dump();
}

std::string star_json(const ConcreteFinCat& k, const StarCheckResult& r) {
  json j;
  j["holds"] = r.holds;
  if (r.failure) {
    const StarFailure& f = *r.failure;
    json e;
    e["obj_a"] = k.cat.object_id(f.obj_a);
    e["obj_b"] = k.cat.object_id(f.obj_b);
    json b = json::object();
    for (size_t p = 0; p < f.bijection.size(); ++p)
      b[k.data.labels[f.obj_a][p]] = k.data.labels[f.obj_b][f.bijection[p]];
    e["bijection"] = std::move(b);
    e["matching_objects"] = f.matching_objects;
    j["failure"] = std::move(e);
  } else {
    j["failure"] = json(nullptr);
  }
  return j.dump();
}

std::string representation_json(const FinCat& c, const Representation& rep) {
  json j;
  j["witness"] = c.object_id(rep.witness);
  json g = json::object();
  for (int o = 0; o < c.object_count(); ++o) {
    json arr = json::array();
    for (int mor : rep.g[o]) arr.push_back(c.morphism(mor).id);
    g[c.object_id(o)] = std::move(arr);
  }
  j["g"] = std::move(g);
  return j.dump();
}

std::string make_report(const std::string& command, const std::string& digest,
                        const std::string& status, const ReportStats& stats,
                        const std::string& result_json, const std::string& witnesses_json) {
  json j;
  j["command"] = command;
  j["format_version"] = 1;
  j["input_digest"] = digest;
  j["result"] = json::parse(result_json);
  j["stats"] = {{"nodes_visited", stats.nodes_visited}, {"elapsed_ms", stats.elapsed_ms}};
  j["status"] = status;
  j["witnesses"] = json::parse(witnesses_json);
  return j.dump(2) + "\n";
}

namespace {

std::string scalar_str(const json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const json& arr) {
  for (const auto& e : arr)
    if (e.is_structured()) return false;
  return true;
}

void print_tree(std::ostringstream& os, const json& v, int depth) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << pad << "(empty)\n";
      return;
    }
    for (const auto& item : v.items()) {
      const json& val = item.value();
      if (val.is_structured()) {
        if (val.empty())
          os << pad << item.key() << ": " << (val.is_array() ? "[]" : "{}") << "\n";
        else if (val.is_array() && all_scalars(val))
          os << pad << item.key() << ": " << val.dump() << "\n";
        else {
          os << pad << item.key() << ":\n";
          print_tree(os, val, depth + 1);
        }
      } else {
        os << pad << item.key() << ": " << scalar_str(val) << "\n";
      }
    }
  } else if (v.is_array()) {
    if (v.empty()) {
      os << pad << "(none)\n";
      return;
    }
    for (const auto& e : v) {
      if (e.is_object() || (e.is_array() && !all_scalars(e))) {
        os << pad << "-\n";
        print_tree(os, e, depth + 1);
      } else {
        os << pad << "- " << (e.is_array() ? e.dump() : scalar_str(e)) << "\n";
      }
    }
  } else {
    os << pad << scalar_str(v) << "\n";
  }
}

}  // namespace

std::string render_text(const std::string& report_json) {
  const json j = json::parse(report_json);
  std::ostringstream os;
  os << "command: " << j.at("command").get<std::string>() << "\n";
  os << "status: " << j.at("status").get<std::string>() << "\n";
  os << "input digest: " << j.at("input_digest").get<std::string>() << "\n";
  os << "nodes visited: " << j.at("stats").at("nodes_visited") << "\n";
  os << "elapsed ms: " << j.at("stats").at("elapsed_ms") << "\n";
  os << "result:\n";
  print_tree(os, j.at("result"), 1);
  const json& w = j.at("witnesses");
  if (!(w.is_object() && w.empty()) && !w.is_null()) {
    os << "witnesses:\n";
    print_tree(os, w, 1);
  }
  return os.str();
}

}  // namespace fincat

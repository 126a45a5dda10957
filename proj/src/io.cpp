#include "mdcalc/io.hpp"

#include <fstream>
#include <sstream>

#include "mdcalc/dsl.hpp"
#include "mdcalc/errors.hpp"

namespace mdcalc::io {

Json to_json(const Operator& p) {
  Json j;
  j["vars"] = p.nvars();
  j["top"] = p.top();
  if (p.floor()) {
    j["floor"] = *p.floor();
  } else {
    j["floor"] = "exact";
  }
  Json comps = Json::object();
  for (auto it = p.components().rbegin(); it != p.components().rend(); ++it) {
    comps[std::to_string(it->first)] = it->second.to_string();
  }
  j["components"] = comps;
  return j;
}

Operator operator_from_json(const Json& j) {
  try {
    const int vars = j.at("vars").get<int>();
    const int top = j.at("top").get<int>();
    std::optional<int> floor;
    const Json& f = j.at("floor");
    if (f.is_string()) {
      if (f.get<std::string>() != "exact") throw Error(ErrorKind::SchemaError, "floor must be an integer or \"exact\"");
    } else {
      floor = f.get<int>();
    }
    if (vars < 1) throw Error(ErrorKind::SchemaError, "vars must be positive");
    const TruncationContext ctx{vars};
    Operator::Components comps;
    for (const auto& [key, text] : j.at("components").items()) {
      int degree = 0;
      std::size_t used = 0;
      try {
        degree = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size()) throw Error(ErrorKind::SchemaError, "component key '" + key + "' is not an integer");
      Operator part = dsl::evaluate(text.get<std::string>(), dsl::EvalConfig{vars, ctx.default_floor});
      if (!part.is_exact()) throw Error(ErrorKind::SchemaError, "component text must be a finite symbol");
      for (const auto& [d, s] : part.components()) {
        if (d != degree) {
          throw Error(ErrorKind::SchemaError, "component '" + key + "' has a term of degree " + std::to_string(d));
        }
        comps.emplace(degree, s);
      }
    }
    return Operator::from_components(ctx, top, floor, comps);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("operator JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    throw Error(ErrorKind::SchemaError, std::string("operator JSON: ") + e.what());
  }
}

Json to_json(const StarUnitarity& cert) {
  Json j;
  j["ok"] = cert.ok;
  if (cert.first_defect_degree) j["first_defect_degree"] = *cert.first_defect_degree;
  if (cert.defect_symbol) j["defect_symbol"] = cert.defect_symbol->to_string();
  if (!cert.ok && !cert.reason.empty()) j["reason"] = cert.reason;
  return j;
}

Json to_json(const xm::FiniteGroup& g) {
  Json j;
  j["elements"] = g.labels();
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.label(g.mul(a, b)));
    table.push_back(row);
  }
  j["table"] = table;
  j["identity"] = g.label(g.identity());
  return j;
}

Json to_json(const xm::Shape& s) {
  Json j;
  j["shape"] = xm::to_string(s.kind);
  if (s.group) j["group"] = to_json(*s.group);
  return j;
}

Json to_json(const xm::CrossedModuleReport& r) {
  Json j;
  j["valid"] = r.ok();
  Json v = Json::array();
  for (const auto& violation : r.violations) {
    v.push_back({{"axiom", violation.axiom}, {"witnesses", violation.witnesses}});
  }
  j["violations"] = v;
  return j;
}

Json to_json(const xm::Cover& cover, const xm::CrossedModule& cm, const xm::DescentDatum& d) {
  Json g = Json::object();
  for (int i = 0; i < cover.size(); ++i) {
    g[std::to_string(cover.opens()[i])] = cm.g_zero.label(d.g[i]);
  }
  Json h = Json::object();
  for (std::size_t e = 0; e < cover.doubles().size(); ++e) {
    auto [i, j] = cover.doubles()[e];
    h[std::to_string(cover.opens()[i]) + "," + std::to_string(cover.opens()[j])] =
        cm.g_minus1.label(d.h[e]);
  }
  return Json{{"g", g}, {"h", h}};
}

Json to_json(const xm::H1Classification& r, const xm::Cover& cover, const xm::CrossedModule& cm,
             bool representatives) {
  Json j;
  j["class_count"] = r.classes.size();
  Json classes = Json::array();
  for (const auto& cls : r.classes) {
    Json c;
    c["size"] = cls.size;
    c["automorphisms"] = cls.automorphisms;
    if (representatives) c["representative"] = to_json(cover, cm, cls.representative);
    classes.push_back(c);
  }
  j["classes"] = classes;
  j["pointed_class_index"] = r.pointed_class_index;
  j["search_size"] = r.search_size;
  j["valid_data"] = r.valid_data;
  return j;
}

namespace {

// Collects schema problems so one SchemaError reports all of them.
struct Problems {
  std::vector<std::string> list;
  void add(const std::string& where, const std::string& what) { list.push_back(where + ": " + what); }
  void raise_if_any() const {
    if (list.empty()) return;
    std::string msg;
    for (const auto& p : list) msg += (msg.empty() ? "" : "; ") + p;
    throw Error(ErrorKind::SchemaError, msg);
  }
};

std::string describe(const Json& j) {
  std::string s = j.dump();
  return s.size() > 40 ? s.substr(0, 37) + "..." : s;
}

std::optional<xm::FiniteGroup> group_or_problem(const Json& j, const std::string& where,
                                                Problems& problems) {
  try {
    return group_from_json(j);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SchemaError) throw;
    problems.add(where, e.what());
  }
  return std::nullopt;
}

std::optional<int> element(const xm::FiniteGroup& g, const Json& j, const std::string& where,
                           Problems& problems) {
  if (j.is_string()) {
    for (int a = 0; a < g.order(); ++a) {
      if (g.label(a) == j.get<std::string>()) return a;
    }
  } else if (j.is_number_integer()) {
    // integers name elements by label, e.g. 2 in Z/4
    const std::string label = std::to_string(j.get<long>());
    for (int a = 0; a < g.order(); ++a) {
      if (g.label(a) == label) return a;
    }
  }
  problems.add(where, "unknown element " + describe(j));
  return std::nullopt;
}

void raise_axioms(const std::string& where, const std::vector<std::string>& failures) {
  if (failures.empty()) return;
  std::string msg = where + ":";
  for (const auto& f : failures) msg += " " + f + ";";
  msg.pop_back();
  throw Error(ErrorKind::AxiomViolation, msg);
}

}  // namespace

xm::FiniteGroup group_from_json(const Json& j) {
  if (j.is_string()) return xm::FiniteGroup::named(j.get<std::string>());
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "group must be a name or an object");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorKind::SchemaError, "group name must be a string");
    return xm::FiniteGroup::named(j["name"].get<std::string>());
  }
  Problems problems;
  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty()) {
    problems.add("group", "missing non-empty \"elements\" list");
  }
  if (!j.contains("table") || !j["table"].is_array()) problems.add("group", "missing \"table\"");
  problems.raise_if_any();
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (e.is_string()) {
      labels.push_back(e.get<std::string>());
    } else if (e.is_number_integer()) {
      labels.push_back(std::to_string(e.get<long>()));
    } else {
      problems.add("group elements", "element " + describe(e) + " is not a string or integer");
    }
  }
  problems.raise_if_any();
  const int n = static_cast<int>(labels.size());
  auto lookup = [&](const Json& v, const std::string& where) -> int {
    const std::string label = v.is_string() ? v.get<std::string>()
                              : v.is_number_integer() ? std::to_string(v.get<long>())
                                                      : std::string();
    for (int a = 0; a < n; ++a) {
      if (labels[a] == label) return a;
    }
    problems.add(where, "unknown element " + describe(v));
    return 0;
  };
  const Json& rows = j["table"];
  if (static_cast<int>(rows.size()) != n) {
    problems.add("group table", std::to_string(rows.size()) + " rows for " + std::to_string(n) + " elements");
  }
  std::vector<std::vector<int>> table;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "group table row " + std::to_string(r);
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) {
      problems.add(where, "must list " + std::to_string(n) + " entries");
      continue;
    }
    std::vector<int> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) row.push_back(lookup(rows[r][c], where));
    table.push_back(row);
  }
  problems.raise_if_any();
  xm::FiniteGroup g(labels, table);
  return g;
}

xm::CrossedModule crossed_module_from_json(const Json& j, bool check_axioms) {
  Problems problems;
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "crossed module must be an object");
  for (const char* key : {"g1", "g0", "d"}) {
    if (!j.contains(key)) problems.add("crossed module", std::string("missing \"") + key + "\"");
  }
  problems.raise_if_any();
  auto g1 = group_or_problem(j["g1"], "g1", problems);
  auto g0 = group_or_problem(j["g0"], "g0", problems);
  problems.raise_if_any();
  if (check_axioms) {
    raise_axioms("g1", g1->validate());
    raise_axioms("g0", g0->validate());
  } else if (!g1->validate().empty() || !g0->validate().empty()) {
    // no usable identity or inverses; d and action cannot be interpreted
    return xm::CrossedModule{*g1, *g0, std::vector<int>(g1->order(), 0),
                             std::vector<std::vector<int>>(g0->order(), std::vector<int>(g1->order(), 0))};
  }

  std::vector<int> d(g1->order(), g0->identity());
  std::vector<bool> seen(g1->order(), false);
  const Json& dj = j["d"];
  auto assign = [&](const Json& from, const Json& to, const std::string& where) {
    auto a = element(*g1, from, where, problems);
    auto b = element(*g0, to, where, problems);
    if (a && b) {
      d[*a] = *b;
      seen[*a] = true;
    }
  };
  if (dj.is_object()) {
    for (const auto& [key, value] : dj.items()) assign(Json(key), value, "d[" + key + "]");
  } else if (dj.is_array()) {
    if (static_cast<int>(dj.size()) != g1->order()) {
      problems.add("d", "list must have one entry per element of g1");
    } else {
      for (int a = 0; a < g1->order(); ++a) {
        auto b = element(*g0, dj[a], "d[" + g1->label(a) + "]", problems);
        if (b) {
          d[a] = *b;
          seen[a] = true;
        }
      }
    }
  } else {
    problems.add("d", "must be an object or a list");
  }
  for (int a = 0; a < g1->order(); ++a) {
    if (!seen[a] && (dj.is_object())) problems.add("d", "no image for " + g1->label(a));
  }

  const Json action = j.contains("action") ? j["action"] : Json("trivial");
  std::optional<xm::CrossedModule> cm;
  if (action.is_string() && action.get<std::string>() == "trivial") {
    problems.raise_if_any();
    cm = xm::CrossedModule::with_trivial_action(*g1, *g0, d);
  } else if (action.is_string() && action.get<std::string>() == "conjugation") {
    for (int a = 0; a < g1->order(); ++a) {
      bool found = false;
      for (int b = 0; b < g0->order(); ++b) found = found || g0->label(b) == g1->label(a);
      if (!found) problems.add("action", "conjugation needs g1 labels inside g0; missing " + g1->label(a));
    }
    problems.raise_if_any();
    cm = xm::CrossedModule::with_conjugation_action(*g1, *g0, d);
  } else if (action.is_object()) {
    problems.raise_if_any();
    cm = xm::CrossedModule::with_trivial_action(*g1, *g0, d);
    std::vector<std::vector<bool>> given(g0->order(), std::vector<bool>(g1->order(), false));
    for (const auto& [gkey, row] : action.items()) {
      auto g = element(*g0, Json(gkey), "action[" + gkey + "]", problems);
      if (!g) continue;
      if (!row.is_object()) {
        problems.add("action[" + gkey + "]", "must be an object");
        continue;
      }
      for (const auto& [hkey, value] : row.items()) {
        const std::string where = "action[" + gkey + "][" + hkey + "]";
        auto h = element(*g1, Json(hkey), where, problems);
        auto v = element(*g1, value, where, problems);
        if (h && v) {
          cm->action[*g][*h] = *v;
          given[*g][*h] = true;
        }
      }
    }
    for (int g = 0; g < g0->order(); ++g) {
      for (int h = 0; h < g1->order(); ++h) {
        if (!given[g][h]) problems.add("action", "missing ^" + g0->label(g) + " " + g1->label(h));
      }
    }
  } else {
    problems.add("action", "must be \"trivial\", \"conjugation\" or an object");
  }
  problems.raise_if_any();

  auto report = xm::validate_crossed_module(*cm);
  if (check_axioms && !report.ok()) {
    std::vector<std::string> failures;
    for (const auto& v : report.violations) failures.push_back(v.to_string());
    raise_axioms("crossed module", failures);
  }
  return *cm;
}

xm::Cover cover_from_json(const Json& j) {
  Problems problems;
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "cover must be an object");
  auto ints = [&](const Json& v, const std::string& where, std::size_t arity) {
    std::vector<int> out;
    if (!v.is_array() || (arity && v.size() != arity)) {
      problems.add(where, arity ? "must list " + std::to_string(arity) + " opens" : "must be a list");
      return out;
    }
    for (const auto& x : v) {
      if (x.is_number_integer()) {
        out.push_back(x.get<int>());
      } else {
        problems.add(where, "open " + describe(x) + " is not an integer");
      }
    }
    return out;
  };
  if (!j.contains("opens")) problems.add("cover", "missing \"opens\"");
  if (!j.contains("doubles")) problems.add("cover", "missing \"doubles\"");
  problems.raise_if_any();
  std::vector<int> opens = ints(j["opens"], "opens", 0);
  std::vector<std::pair<int, int>> doubles;
  const Json& dj = j["doubles"];
  if (!dj.is_array()) problems.add("doubles", "must be a list");
  else
    for (std::size_t k = 0; k < dj.size(); ++k) {
      auto p = ints(dj[k], "doubles[" + std::to_string(k) + "]", 2);
      if (p.size() == 2) doubles.push_back({p[0], p[1]});
    }
  std::vector<std::vector<int>> triples;
  if (j.contains("triples")) {
    const Json& tj = j["triples"];
    if (!tj.is_array()) problems.add("triples", "must be a list");
    else
      for (std::size_t k = 0; k < tj.size(); ++k) {
        auto t = ints(tj[k], "triples[" + std::to_string(k) + "]", 3);
        if (t.size() == 3) triples.push_back(t);
      }
  }
  problems.raise_if_any();
  return xm::Cover(opens, doubles, triples);
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SchemaError, path.string() + ": " + e.what());
  }
}

xm::CrossedModule load_crossed_module(const std::filesystem::path& path, bool check_axioms) {
  return crossed_module_from_json(read_json(path), check_axioms);
}

xm::Cover load_cover(const std::filesystem::path& path) { return cover_from_json(read_json(path)); }

}  // namespace mdcalc::io

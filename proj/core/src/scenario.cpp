#include "gerbel/scenario.hpp"

#include <limits>
#include <sstream>

#include "gerbel/carriers.hpp"

namespace gerbel::scenario {

namespace {

template <typename Map>
const typename Map::mapped_type& find_in(const Map& m, const std::string& name,
                                         const char* kind) {
  auto it = m.find(name);
  if (it == m.end())
    throw Error(std::string("unknown ") + kind + " \"" + name + "\"");
  return it->second;
}

}  // namespace

Scenario::Scenario(const json& doc, Options opt) : opt_(opt) {
  if (!doc.is_object()) throw Error("document: top level must be an object");
  if (doc.contains("declarations")) {
    if (!doc.at("declarations").is_object())
      throw Error("document: declarations must be an object");
    for (const auto& [name, j] : doc.at("declarations").items())
      declare(name, j);
  }
  tasks_ = doc.value("tasks", json::array());
}

void Scenario::declare(const std::string& name, const json& j) {
  std::string type = j.at("type").get<std::string>();
  try {
    if (type == "group") {
      groups_[name] = std::make_unique<FiniteGroup>(json_io::group_from_json(j));
    } else if (type == "crossed_module") {
      auto cm = j.contains("g") && j.at("g").is_string()
                    ? CrossedModule{group(j.at("g").get<std::string>()),
                                    group(j.at("h").get<std::string>()),
                                    j.at("t").get<std::vector<int>>(),
                                    j.at("alpha")
                                        .get<std::vector<std::vector<int>>>()}
                    : json_io::crossed_module_from_json(j);
      crossed_modules_[name] = std::make_unique<CrossedModule>(std::move(cm));
    } else if (type == "two_group") {
      TwoGroupEntry e;
      if (j.contains("from_crossed_module"))
        e.g = std::make_unique<TwoGroup>(two_group_from_crossed_module(
            crossed_module(j.at("from_crossed_module").get<std::string>())));
      else
        e.g = std::make_unique<TwoGroup>(json_io::two_group_from_json(j));
      try {
        e.crossed = std::make_unique<CrossedModuleOfTwoGroup>(
            crossed_module_from_two_group(*e.g));
      } catch (const Error&) {
        // Invalid 2-groups stay declarable so check-2group can report them.
      }
      two_groups_[name] = std::move(e);
    } else if (type == "two_group_hom") {
      homs_[name] = std::make_unique<TwoGroupHom>(TwoGroupHom{
          two_group(j.at("source").get<std::string>()).g.get(),
          two_group(j.at("target").get<std::string>()).g.get(),
          j.at("f0").get<std::vector<int>>(),
          j.at("f1").get<std::vector<int>>()});
    } else if (type == "algebra") {
      algebras_[name] =
          std::make_unique<StarAlgebra>(json_io::algebra_from_json(j));
    } else if (type == "representation") {
      const auto& g = two_group(j.at("group").get<std::string>());
      const auto& a = algebra(j.at("algebra").get<std::string>());
      representations_[name] = std::make_unique<Representation>(
          json_io::representation_from_json(*g.g, a, j));
    } else if (type == "cover") {
      covers_[name] = std::make_unique<Cover>(json_io::cover_from_json(j));
    } else if (type == "two_bundle") {
      const auto& g = two_group(j.at("two_group").get<std::string>());
      if (!g.crossed) throw Error("two_bundle: structure 2-group is invalid");
      bundles_[name] = std::make_unique<PrincipalTwoBundle>(
          json_io::bundle_from_json(*g.g, *g.crossed, j));
    } else if (type == "gerbe") {
      const auto& g = two_group(j.at("two_group").get<std::string>());
      if (!g.crossed) throw Error("gerbe: structure 2-group is invalid");
      gerbes_[name] = std::make_unique<BundleGerbe>(
          json_io::gerbe_from_json(*g.g, *g.crossed, j));
    } else if (type == "bimodule") {
      const auto& l = algebra(j.at("left").get<std::string>());
      const auto& r = algebra(j.at("right").get<std::string>());
      bimodules_[name] =
          std::make_unique<Bimodule>(json_io::bimodule_from_json(l, r, j));
    } else if (type == "two_vector_bundle") {
      const auto& a = algebra(j.at("algebra").get<std::string>());
      two_vector_bundles_[name] = std::make_unique<TwoVectorBundle>(
          json_io::two_vector_bundle_from_json(a, j));
    } else {
      throw Error("unknown declaration type \"" + type + "\"");
    }
  } catch (const json::exception& e) {
    throw Error("declaration \"" + name + "\": " + e.what());
  }
}

const FiniteGroup& Scenario::group(const std::string& n) const {
  return *find_in(groups_, n, "group");
}
const CrossedModule& Scenario::crossed_module(const std::string& n) const {
  return *find_in(crossed_modules_, n, "crossed module");
}
const Scenario::TwoGroupEntry& Scenario::two_group(const std::string& n) const {
  return find_in(two_groups_, n, "2-group");
}
const StarAlgebra& Scenario::algebra(const std::string& n) const {
  return *find_in(algebras_, n, "algebra");
}
const Representation& Scenario::representation(const std::string& n) const {
  return *find_in(representations_, n, "representation");
}
const Cover& Scenario::cover(const std::string& n) const {
  return *find_in(covers_, n, "cover");
}
const PrincipalTwoBundle& Scenario::bundle(const std::string& n) const {
  return *find_in(bundles_, n, "2-bundle");
}
const BundleGerbe& Scenario::gerbe(const std::string& n) const {
  return *find_in(gerbes_, n, "gerbe");
}
const Bimodule& Scenario::bimodule(const std::string& n) const {
  return *find_in(bimodules_, n, "bimodule");
}
const TwoVectorBundle& Scenario::two_vector_bundle(const std::string& n) const {
  return *find_in(two_vector_bundles_, n, "2-vector bundle");
}
const TwoGroupHom& Scenario::two_group_hom(const std::string& n) const {
  return *find_in(homs_, n, "2-group homomorphism");
}

std::string Scenario::resolve_unique(const std::string& kind,
                                     const std::string& name) const {
  if (!name.empty()) return name;
  auto only = [&](const auto& m) -> std::string {
    if (m.size() != 1)
      throw Error("no --input given and the document declares " +
                  std::to_string(m.size()) + " " + kind + "s");
    return m.begin()->first;
  };
  if (kind == "crossed_module") return only(crossed_modules_);
  if (kind == "two_group") return only(two_groups_);
  if (kind == "representation") return only(representations_);
  if (kind == "gerbe") return only(gerbes_);
  if (kind == "two_vector_bundle") return only(two_vector_bundles_);
  if (kind == "bimodule") return only(bimodules_);
  if (kind == "algebra") return only(algebras_);
  if (kind == "hom") return only(homs_);
  throw Error("unknown kind \"" + kind + "\"");
}

TaskResult Scenario::run_task(const json& task) {
  std::string cmd = task.at("command").get<std::string>();
  Tolerance tol = opt_.tol;
  if (task.contains("tolerance"))
    tol = Tolerance{task.at("tolerance").get<double>()};
  int sweep = opt_.exhaustive ? std::numeric_limits<int>::max() : 8;
  TaskResult out;
  out.command = cmd;

  if (cmd == "check-crossed-module") {
    std::string n = resolve_unique("crossed_module", task.value("input", ""));
    out.label = n;
    out.report = check_crossed_module(crossed_module(n));
  } else if (cmd == "derive-2group") {
    std::string n = resolve_unique("crossed_module", task.value("input", ""));
    out.label = n;
    out.report = check_crossed_module(crossed_module(n));
    if (out.report.ok()) {
      TwoGroupEntry e;
      e.g = std::make_unique<TwoGroup>(
          two_group_from_crossed_module(crossed_module(n)));
      e.crossed = std::make_unique<CrossedModuleOfTwoGroup>(
          crossed_module_from_two_group(*e.g));
      out.details = {{"g0_order", e.g->G0.order()},
                     {"g1_order", e.g->G1.order()}};
      if (task.contains("output"))
        two_groups_[task.at("output").get<std::string>()] = std::move(e);
    }
  } else if (cmd == "check-2group") {
    std::string n = resolve_unique("two_group", task.value("input", ""));
    out.label = n;
    out.report = check_two_group(*two_group(n).g);
  } else if (cmd == "check-representation") {
    std::string n = resolve_unique("representation", task.value("input", ""));
    out.label = n;
    out.report = check_representation(representation(n), tol);
  } else if (cmd == "fuse") {
    std::string l = task.at("left").get<std::string>();
    std::string r = task.at("right").get<std::string>();
    out.label = l + " ⊠ " + r;
    Fusion f = fuse(bimodule(l), bimodule(r), tol);
    out.report = check_bimodule(f.module, tol);
    out.details = {{"dim", f.module.dim}};
    if (task.contains("output"))
      bimodules_[task.at("output").get<std::string>()] =
          std::make_unique<Bimodule>(f.module);
  } else if (cmd == "chi-table") {
    std::string n = resolve_unique("algebra", task.value("algebra", ""));
    out.label = n;
    const StarAlgebra& a = algebra(n);
    std::vector<Automorphism> thetas;
    for (const json& t : task.at("automorphisms"))
      thetas.push_back(json_io::automorphism_from_json(a, t));
    json table = json::array();
    for (std::size_t i = 0; i < thetas.size(); ++i)
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        Bimodule h = twisted_standard(a, thetas[i]);
        Bimodule k = twisted_standard(a, thetas[j]);
        Fusion f = fuse(h, k, tol);
        json entry = {{"theta1", i}, {"theta2", j}, {"dim", f.module.dim}};
        try {
          Intertwiner c = chi(a, thetas[i], thetas[j], f, tol);
          entry["chi"] = json_io::to_json(c.u);
        } catch (const Error& e) {
          out.report.add("pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")",
                         e.what());
        }
        table.push_back(std::move(entry));
      }
    out.details = {{"table", std::move(table)}};
  } else if (cmd == "check-gerbe") {
    std::string n = resolve_unique("gerbe", task.value("input", ""));
    out.label = n;
    out.report = check_gerbe(gerbe(n));
  } else if (cmd == "extend") {
    std::string n = resolve_unique("gerbe", task.value("input", ""));
    std::string hn = resolve_unique("hom", task.value("hom", ""));
    out.label = n + " along " + hn;
    const TwoGroupHom& f = two_group_hom(hn);
    const CrossedModuleOfTwoGroup* target_crossed = nullptr;
    for (const auto& [gn, e] : two_groups_)
      if (e.g.get() == f.target) target_crossed = e.crossed.get();
    if (!target_crossed) throw Error("extend: target 2-group not declared");
    auto ext = std::make_unique<BundleGerbe>(
        extend_gerbe(gerbe(n), f, *target_crossed));
    out.report = check_gerbe(*ext);
    if (task.contains("output"))
      gerbes_[task.at("output").get<std::string>()] = std::move(ext);
  } else if (cmd == "associate") {
    std::string gn = resolve_unique("gerbe", task.value("gerbe", ""));
    std::string rn =
        resolve_unique("representation", task.value("representation", ""));
    out.label = gn + " ×_𝒢 " + rn;
    auto v = std::make_unique<TwoVectorBundle>(
        associate(gerbe(gn), representation(rn), tol, sweep));
    out.details = {{"fibre_dims", json::array()}};
    for (const Bimodule& m : v->m) out.details["fibre_dims"].push_back(m.dim);
    if (task.contains("output"))
      two_vector_bundles_[task.at("output").get<std::string>()] = std::move(v);
  } else if (cmd == "check-2vb") {
    std::string n =
        resolve_unique("two_vector_bundle", task.value("input", ""));
    out.label = n;
    out.report = check_two_vector_bundle(two_vector_bundle(n), tol);
  } else if (cmd == "check-refinement") {
    std::string sn =
        resolve_unique("two_vector_bundle", task.value("source", ""));
    const TwoVectorBundle& src = two_vector_bundle(sn);
    if (task.value("identity", false)) {
      out.label = "identity of " + sn;
      Refinement r = identity_refinement(src);
      out.report = check_refinement(r, tol);
    } else {
      std::string tn =
          resolve_unique("two_vector_bundle", task.value("target", ""));
      out.label = sn + " → " + tn;
      Refinement r =
          json_io::refinement_from_json(src, two_vector_bundle(tn), task);
      out.report = check_refinement(r, tol);
    }
  } else {
    throw Error("unknown command \"" + cmd + "\"");
  }
  return out;
}

std::vector<TaskResult> Scenario::run() {
  std::vector<TaskResult> out;
  for (const json& t : tasks_) out.push_back(run_task(t));
  return out;
}

bool all_ok(const std::vector<TaskResult>& results) {
  for (const TaskResult& r : results)
    if (!r.report.ok()) return false;
  return true;
}

std::string render_text(const std::vector<TaskResult>& results) {
  std::ostringstream os;
  for (const TaskResult& r : results) {
    os << r.command << " " << r.label << ": "
       << (r.report.ok() ? "ok" : "FAILED") << "\n";
    for (const Violation& v : r.report.violations())
      os << "  " << v.location << ": " << v.equation
         << " (residual " << v.residual << ")\n";
    if (r.details.contains("dim")) os << "  dim = " << r.details["dim"] << "\n";
    if (r.details.contains("fibre_dims"))
      os << "  fibre dims = " << r.details["fibre_dims"].dump() << "\n";
  }
  return os.str();
}

json render_json(const std::vector<TaskResult>& results) {
  json out = json::array();
  for (const TaskResult& r : results)
    out.push_back({{"command", r.command},
                   {"label", r.label},
                   {"report", json_io::to_json(r.report)},
                   {"details", r.details}});
  return out;
}

std::vector<std::string> demo_names() {
  return {"central-extension", "trivial", "s3-inner"};
}

namespace {

json central_extension_document(bool trivial_cocycle) {
  carriers::CentralExtensionScenario s;
  json decls;
  decls["m2"] = json_io::to_json(s.algebra);
  decls["m2"]["type"] = "algebra";
  decls["cm"] = json_io::to_json(s.cm);
  decls["cm"]["type"] = "crossed_module";
  decls["g"] = {{"type", "two_group"}, {"from_crossed_module", "cm"}};
  decls["rep"] = json_io::representation_to_json(s.rep);
  decls["rep"]["type"] = "representation";
  decls["rep"]["group"] = "g";
  decls["rep"]["algebra"] = "m2";
  json cocycle;
  if (trivial_cocycle) {
    cocycle = {{"g", std::vector<int>(s.g_table.size(), 0)},
               {"h", std::vector<int>(s.h_table.size(), 0)}};
  } else {
    cocycle = {{"g", s.g_table}, {"h", s.h_table}};
  }
  decls["gerbe"] = {{"type", "gerbe"},
                    {"two_group", "g"},
                    {"cover", json_io::to_json(s.cover)},
                    {"cocycle", std::move(cocycle)}};
  json tasks = json::array(
      {{{"command", "check-crossed-module"}, {"input", "cm"}},
       {{"command", "check-2group"}, {"input", "g"}},
       {{"command", "check-representation"}, {"input", "rep"}},
       {{"command", "check-gerbe"}, {"input", "gerbe"}},
       {{"command", "associate"},
        {"gerbe", "gerbe"},
        {"representation", "rep"},
        {"output", "V"}},
       {{"command", "check-2vb"}, {"input", "V"}},
       {{"command", "check-refinement"}, {"source", "V"}, {"identity", true}}});
  return json{{"version", "1"},
              {"declarations", std::move(decls)},
              {"tasks", std::move(tasks)}};
}

json s3_inner_document() {
  CrossedModule cm = carriers::inner(FiniteGroup::symmetric3());
  json decls;
  decls["s3-inner"] = json_io::to_json(cm);
  decls["s3-inner"]["type"] = "crossed_module";
  json tasks = json::array(
      {{{"command", "check-crossed-module"}, {"input", "s3-inner"}},
       {{"command", "derive-2group"}, {"input", "s3-inner"}, {"output", "g"}},
       {{"command", "check-2group"}, {"input", "g"}}});
  return json{{"version", "1"},
              {"declarations", std::move(decls)},
              {"tasks", std::move(tasks)}};
}

}  // namespace

json demo_document(const std::string& name) {
  if (name == "central-extension") return central_extension_document(false);
  if (name == "trivial") return central_extension_document(true);
  if (name == "s3-inner") return s3_inner_document();
  throw Error("unknown demo \"" + name + "\"");
}

}  // namespace gerbel::scenario

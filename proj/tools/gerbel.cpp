// gerbel: command-line verifier and calculator for finite 2-group gauge
// structures (crossed modules, 2-group representations, bundle gerbes and
// their associated 2-Hilbert bundles).
//
// Exit codes: 0 = all checks passed, 1 = checks ran and found violations,
// 2 = malformed input (unparseable document, unresolved names, bad flags).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gerbel/scenario.hpp"

namespace {

using gerbel::scenario::Options;
using gerbel::scenario::Scenario;
using gerbel::scenario::TaskResult;
using nlohmann::json;

struct GlobalFlags {
  std::string doc_path;
  double tolerance = gerbel::default_tolerance().eps;
  bool exhaustive = false;
  std::string format = "text";
  std::string out_path;
};

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gerbel::Error("cannot open \"" + path + "\"");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw gerbel::Error("cannot parse \"" + path + "\": " + e.what());
  }
  return doc;
}

void emit(const GlobalFlags& g, const std::vector<TaskResult>& results) {
  std::string rendered = g.format == "json"
                             ? gerbel::scenario::render_json(results).dump(2) + "\n"
                             : gerbel::scenario::render_text(results);
  if (g.out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(g.out_path);
    if (!out) throw gerbel::Error("cannot write \"" + g.out_path + "\"");
    out << rendered;
  }
}

int finish(const GlobalFlags& g, const std::vector<TaskResult>& results) {
  emit(g, results);
  return gerbel::scenario::all_ok(results) ? 0 : 1;
}

// Runs one subcommand against a document: the document's own task list is
// filtered to this command; if it has none, a task is synthesized from the
// command-line flags in `extra`.
int run_command(const GlobalFlags& g, const std::string& command,
                const json& extra) {
  json doc = load_document(g.doc_path);
  Options opt;
  opt.tol = gerbel::Tolerance{g.tolerance};
  opt.exhaustive = g.exhaustive;
  Scenario sc(doc, opt);

  std::vector<json> tasks;
  for (const json& t : doc.value("tasks", json::array()))
    if (t.value("command", "") == command) tasks.push_back(t);
  if (tasks.empty()) {
    json t = extra;
    t["command"] = command;
    tasks.push_back(std::move(t));
  }

  // Earlier tasks may produce the inputs of later ones (derive/extend/
  // associate chains), so the whole document task list runs; only the
  // filtered command's results are reported.
  std::vector<TaskResult> reported;
  for (const json& t : doc.value("tasks", json::array())) {
    TaskResult r = sc.run_task(t);
    if (r.command == command) reported.push_back(std::move(r));
  }
  if (reported.empty())
    for (const json& t : tasks) reported.push_back(sc.run_task(t));
  return finish(g, reported);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifier for finite crossed modules, strict 2-groups, their "
               "unitary representations on finite-dimensional *-algebras, "
               "nonabelian bundle gerbes and associated 2-Hilbert bundles."};
  app.require_subcommand(1);

  GlobalFlags g;
  const char* env_tol = std::getenv("GERBEL_TOLERANCE");
  if (env_tol) g.tolerance = std::atof(env_tol);

  auto add_common = [&](CLI::App* cmd, bool needs_doc = true) {
    if (needs_doc)
      cmd->add_option("document", g.doc_path, "Scenario document (JSON)")
          ->required();
    cmd->add_option("--tolerance", g.tolerance,
                    "Numerical tolerance (default: GERBEL_TOLERANCE env var "
                    "or 1e-9)");
    cmd->add_flag("--exhaustive", g.exhaustive,
                  "Sweep all section choices in monoidality checks instead "
                  "of a bounded sample");
    cmd->add_option("--format", g.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", g.out_path, "Write the report to a file");
  };

  std::string input, left, right, hom, gerbe_name, rep_name, source, target;
  bool identity = false;

  auto simple = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    add_common(c);
    c->add_option("--input", input, "Declaration to check (defaults to the "
                                    "unique one of the right kind)");
    return c;
  };

  simple("check-crossed-module", "Verify the crossed-module equations");
  simple("derive-2group", "Build the strict 2-group of a crossed module");
  simple("check-2group", "Verify the strict 2-group axioms");
  simple("check-representation",
         "Verify a unitary 2-group representation on a *-algebra");
  simple("check-gerbe", "Verify a nonabelian bundle gerbe");
  simple("check-2vb", "Verify a 2-Hilbert bundle (fibrewise product and "
                      "coherence)");

  CLI::App* cfuse = app.add_subcommand(
      "fuse", "Relative tensor product of two bimodules");
  add_common(cfuse);
  cfuse->add_option("--left", left, "Left bimodule");
  cfuse->add_option("--right", right, "Right bimodule");

  CLI::App* cchi = app.add_subcommand(
      "chi-table", "Composition table of twisted standard bimodules");
  add_common(cchi);
  cchi->add_option("--algebra", input, "Algebra declaration");

  CLI::App* cext = app.add_subcommand(
      "extend", "Extend a gerbe's structure 2-group along a homomorphism");
  add_common(cext);
  cext->add_option("--input", input, "Gerbe declaration");
  cext->add_option("--hom", hom, "2-group homomorphism declaration");

  CLI::App* cassoc = app.add_subcommand(
      "associate", "Associated 2-Hilbert bundle of a gerbe and a "
                   "representation");
  add_common(cassoc);
  cassoc->add_option("--gerbe", gerbe_name, "Gerbe declaration");
  cassoc->add_option("--representation", rep_name,
                     "Representation declaration");

  CLI::App* cref = app.add_subcommand(
      "check-refinement", "Verify a refinement of 2-Hilbert bundles");
  add_common(cref);
  cref->add_option("--source", source, "Source 2-Hilbert bundle");
  cref->add_option("--target", target, "Target 2-Hilbert bundle");
  cref->add_flag("--identity", identity,
                 "Check the identity refinement of --source");

  std::string demo_name = "central-extension";
  bool emit_doc = false;
  CLI::App* cdemo = app.add_subcommand(
      "demo", "Run a built-in end-to-end scenario");
  add_common(cdemo, /*needs_doc=*/false);
  cdemo->add_option("name", demo_name, "One of: central-extension, trivial, "
                                       "s3-inner");
  cdemo->add_flag("--emit-document", emit_doc,
                  "Print the scenario document instead of running it");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cdemo->parsed()) {
      json doc = gerbel::scenario::demo_document(demo_name);
      if (emit_doc) {
        if (g.out_path.empty()) {
          std::cout << doc.dump(2) << "\n";
        } else {
          std::ofstream out(g.out_path);
          if (!out)
            throw gerbel::Error("cannot write \"" + g.out_path + "\"");
          out << doc.dump(2) << "\n";
        }
        return 0;
      }
      Options opt;
      opt.tol = gerbel::Tolerance{g.tolerance};
      opt.exhaustive = g.exhaustive;
      Scenario sc(doc, opt);
      return finish(g, sc.run());
    }

    std::string command;
    json extra;
    for (CLI::App* c : app.get_subcommands()) command = c->get_name();
    if (command == "fuse") {
      if (!left.empty()) extra["left"] = left;
      if (!right.empty()) extra["right"] = right;
    } else if (command == "chi-table") {
      if (!input.empty()) extra["algebra"] = input;
    } else if (command == "extend") {
      if (!input.empty()) extra["input"] = input;
      if (!hom.empty()) extra["hom"] = hom;
    } else if (command == "associate") {
      if (!gerbe_name.empty()) extra["gerbe"] = gerbe_name;
      if (!rep_name.empty()) extra["representation"] = rep_name;
    } else if (command == "check-refinement") {
      if (!source.empty()) extra["source"] = source;
      if (!target.empty()) extra["target"] = target;
      if (identity) extra["identity"] = true;
    } else {
      if (!input.empty()) extra["input"] = input;
    }
    return run_command(g, command, extra);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gerbel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

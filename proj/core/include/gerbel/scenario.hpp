#pragma once

#include <map>
#include <memory>
#include <string>

#include "gerbel/json_io.hpp"

namespace gerbel::scenario {

using nlohmann::json;

struct Options {
  Tolerance tol = default_tolerance();
  bool exhaustive = false;
};

struct TaskResult {
  std::string command;
  std::string label;
  Report report;
  json details;  // command-specific output (dimensions, tables, ...)
};

/// A parsed scenario document: named declarations plus an ordered task list.
/// Declarations are resolved eagerly in document order (references must
/// point to earlier names), task outputs are registered under their
/// "output" name, and all owned objects have stable addresses.
class Scenario {
 public:
  Scenario(const json& doc, Options opt);

  /// Runs the document's own task list.
  std::vector<TaskResult> run();

  /// Runs a single task object {"command": ..., ...} against the
  /// declarations. Throws Error for malformed tasks or unresolved names.
  TaskResult run_task(const json& task);

  /// Name lookup helper for the CLI: if name is empty and exactly one
  /// declaration of the kind exists, that one is used.
  std::string resolve_unique(const std::string& kind,
                             const std::string& name) const;

 private:
  struct TwoGroupEntry {
    std::unique_ptr<TwoGroup> g;
    std::unique_ptr<CrossedModuleOfTwoGroup> crossed;
  };
  void declare(const std::string& name, const json& j);
  const FiniteGroup& group(const std::string& name) const;
  const CrossedModule& crossed_module(const std::string& name) const;
  const TwoGroupEntry& two_group(const std::string& name) const;
  const StarAlgebra& algebra(const std::string& name) const;
  const Representation& representation(const std::string& name) const;
  const Cover& cover(const std::string& name) const;
  const PrincipalTwoBundle& bundle(const std::string& name) const;
  const BundleGerbe& gerbe(const std::string& name) const;
  const Bimodule& bimodule(const std::string& name) const;
  const TwoVectorBundle& two_vector_bundle(const std::string& name) const;
  const TwoGroupHom& two_group_hom(const std::string& name) const;

  Options opt_;
  json tasks_;
  std::map<std::string, std::unique_ptr<FiniteGroup>> groups_;
  std::map<std::string, std::unique_ptr<CrossedModule>> crossed_modules_;
  std::map<std::string, TwoGroupEntry> two_groups_;
  std::map<std::string, std::unique_ptr<TwoGroupHom>> homs_;
  std::map<std::string, std::unique_ptr<StarAlgebra>> algebras_;
  std::map<std::string, std::unique_ptr<Representation>> representations_;
  std::map<std::string, std::unique_ptr<Cover>> covers_;
  std::map<std::string, std::unique_ptr<PrincipalTwoBundle>> bundles_;
  std::map<std::string, std::unique_ptr<BundleGerbe>> gerbes_;
  std::map<std::string, std::unique_ptr<Bimodule>> bimodules_;
  std::map<std::string, std::unique_ptr<TwoVectorBundle>> two_vector_bundles_;
};

bool all_ok(const std::vector<TaskResult>& results);
std::string render_text(const std::vector<TaskResult>& results);
json render_json(const std::vector<TaskResult>& results);

/// Embedded demo documents ("central-extension", "trivial", "s3-inner").
std::vector<std::string> demo_names();
json demo_document(const std::string& name);

}  // namespace gerbel::scenario

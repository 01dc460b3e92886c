#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gerbel {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

/// A single failed check: where it happened, which equation failed, and the
/// numerical residual (0 for purely discrete failures).
struct Violation {
  std::string location;
  std::string equation;
  double residual = 0.0;
};

/// Accumulates violations from a verification pass. Empty report == all
/// checked equations hold.
class Report {
 public:
  bool ok() const { return violations_.empty(); }
  std::size_t size() const { return violations_.size(); }

  void add(std::string location, std::string equation, double residual = 0.0) {
    violations_.push_back({std::move(location), std::move(equation), residual});
  }

  void merge(const Report& other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
  }

  /// Merge with a location prefix on every imported violation.
  void merge(const Report& other, const std::string& prefix) {
    for (const Violation& v : other.violations_)
      violations_.push_back({prefix + v.location, v.equation, v.residual});
  }

  const std::vector<Violation>& violations() const { return violations_; }

  std::string to_string() const;

  /// Throws Error with the report text if the report is non-empty.
  void require(const std::string& context) const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace gerbel

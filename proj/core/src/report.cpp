#include "gerbel/report.hpp"

#include <sstream>

namespace gerbel {

std::string Report::to_string() const {
  if (violations_.empty()) return "ok";
  std::ostringstream os;
  os << violations_.size() << " violation(s):\n";
  for (const auto& v : violations_) {
    os << "  at " << v.location << ": " << v.equation;
    if (v.residual != 0.0) os << " (residual " << v.residual << ")";
    os << "\n";
  }
  return os.str();
}

void Report::require(const std::string& context) const {
  if (!ok()) throw Error(context + ": " + to_string());
}

}  // namespace gerbel

#pragma once

#include <stdexcept>
#include <string>

namespace inoc {

// Violated operation precondition: bad arguments, exceeded caps, infeasible
// construction parameters. The CLI maps these to exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

}  // namespace inoc

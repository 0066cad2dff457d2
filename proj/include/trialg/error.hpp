#pragma once

#include <stdexcept>
#include <string>

namespace trialg {

/// Raised for every contract violation: malformed input, shape or ring
/// mismatch, arithmetic on invalid operands.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trialg

#pragma once

#include <stdexcept>
#include <string>

namespace depclust {

/// Raised for all recoverable failures: bad input files, inconsistent
/// constraint sets, and internal consistency violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace depclust

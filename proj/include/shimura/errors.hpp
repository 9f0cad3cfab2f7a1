#pragma once

#include <stdexcept>

namespace shimura {

/// A quantity that must be a (nonnegative) integer came out otherwise.
/// Always signals a defect upstream; the CLI maps it to exit code 3.
class IntegralityDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shimura

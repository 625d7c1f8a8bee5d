#pragma once

#include <stdexcept>
#include <string>

namespace dch {

/// Operands live in spaces of different dimension.
struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed; indicates an arithmetic
/// bug rather than bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// A polynomial was not of the form sum_j a_j x^j P.
struct decomposition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested computation needs a reflection group this path cannot handle.
struct unsupported_group : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace dch

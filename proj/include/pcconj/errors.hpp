#pragma once

#include <stdexcept>
#include <string>

namespace pcconj {

// A caller violated an operation's precondition: malformed input, degree or
// strand mismatch, an element outside the subgroup it was claimed to lie in,
// or a conjugator that does not conjugate.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested computation is outside what the framework can decide, e.g. a
// centralizer whose image has infinite index, or a subgroup with no PC triple.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcconj

#pragma once

#include <stdexcept>
#include <string>

namespace wreathdec {

// Inputs that land in open or explicitly out-of-scope territory.
// The CLI maps these to exit code 2.
class unsupported_case : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A construction failed its own certification. This is a defect in the
// library, never a consequence of bad input.
class internal_defect : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace wreathdec

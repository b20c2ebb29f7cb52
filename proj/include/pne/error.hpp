#pragma once

#include <stdexcept>
#include <string>

namespace pne {

// Thrown on violated preconditions, malformed inputs, and failed internal
// assertions (e.g. a postcondition that is supposed to hold by proof).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pne

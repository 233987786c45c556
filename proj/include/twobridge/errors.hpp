#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

// Malformed input: bad word characters, n = 2 mod 3, out-of-range locations.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidMove : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An exhaustive computation was asked for beyond its configured size limit.
class ResourceGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twobridge

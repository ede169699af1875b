#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

// Base error for everything the library throws on bad input or bad state.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stylo

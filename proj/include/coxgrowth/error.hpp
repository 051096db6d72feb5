#pragma once

#include <stdexcept>
#include <string>

namespace coxgrowth {

// Exit-code conventions: 2 input, 3 resource cap, 4 internal invariant.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct CapError : std::runtime_error {
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxgrowth

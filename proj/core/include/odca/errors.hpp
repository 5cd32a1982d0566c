#pragma once

#include <stdexcept>
#include <string>

namespace odca {

// Malformed or inconsistent input (bad documents, dimension mismatches,
// unknown symbols, preconditions violated by the caller).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (node budget, memory projection, deadline) was exceeded.
// Never used to silently truncate a search: the caller sees the abort.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace odca

#pragma once

#include <stdexcept>
#include <string>

namespace finmod {

struct InvalidRing : std::runtime_error {
  explicit InvalidRing(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidMCS : std::runtime_error {
  explicit InvalidMCS(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidModule : std::runtime_error {
  explicit InvalidModule(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidMap : std::runtime_error {
  explicit InvalidMap(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finmod

#pragma once

#include <stdexcept>
#include <string>

namespace topo {

/// Violated operation precondition or invalid domain data ("not a face",
/// "pseudomanifold required", ...). The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input (bad JSON, bad flag syntax). Exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace topo

#pragma once

#include <stdexcept>
#include <string>

namespace bip {

// A computational size guard was exceeded (interval enumeration, hull size,
// search memo cap). Recoverable by shrinking the input or raising the limit.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical hypothesis failed on this input: a cycle where a DAG was
// required, a non-generic height vector, ascending edges that do not span a
// face, and so on. Distinct from usage errors so callers can bin outcomes.
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bip

#pragma once

#include <stdexcept>
#include <string>

namespace sqv {

// Error taxonomy. Each class maps to a distinct CLI exit code:
// input 2, resource 3, internal 4. Check failures (nonzero tuples,
// axiom violations) are report content, not exceptions.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require_input(bool ok, const std::string& msg) {
  if (!ok) throw input_error(msg);
}

inline void require_internal(bool ok, const std::string& msg) {
  if (!ok) throw internal_error(msg);
}

}  // namespace sqv

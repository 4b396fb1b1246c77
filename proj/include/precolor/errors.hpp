#pragma once

#include <stdexcept>
#include <string>

namespace precolor {

// Malformed input text or files. The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An extension pipeline was asked to run outside its applicability
// condition (pair budget exceeded, no good matching of the required
// order, ...). The CLI maps this to exit code 3.
struct guarantee_error : std::runtime_error {
  explicit guarantee_error(const std::string& what) : std::runtime_error(what) {}
};

// A randomized generator exhausted its retry budget.
struct retry_error : std::runtime_error {
  explicit retry_error(const std::string& what) : std::runtime_error(what) {}
};

// A long-running search observed its cancellation flag.
struct cancelled_error : std::runtime_error {
  cancelled_error() : std::runtime_error("search cancelled") {}
};

}  // namespace precolor

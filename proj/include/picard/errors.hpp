#pragma once

#include <stdexcept>
#include <string>

namespace picard {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArithmeticOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Interval refinement hit the configured bit cap without deciding a comparison.
struct PrecisionError : std::runtime_error {
  std::string enclosure;
  PrecisionError(const std::string& what, std::string encl)
      : std::runtime_error(what), enclosure(std::move(encl)) {}
};

// A search or closure ran past its configured limit.
struct CapExceeded : std::runtime_error {
  long cap;
  CapExceeded(const std::string& what, long c) : std::runtime_error(what), cap(c) {}
};

}  // namespace picard

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace degseq {

// Every counting result is an exact nonnegative big integer.
using Count = mpz_class;

// Requested table would exceed the configured memory budget.
class CapacityError : public std::runtime_error {
public:
  CapacityError(const std::string &what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what), required_bytes(required), cap_bytes(cap) {}
  std::uint64_t required_bytes;
  std::uint64_t cap_bytes;
};

class LayerNotResidentError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class ParityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A DnSeries does not reach far enough for the requested quantity.
class MissingPriorError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_string(const Count &c) { return c.get_str(); }

} // namespace degseq

#pragma once

#include <stdexcept>
#include <string>

namespace permkit {

// Failure categories shared across the library. Every throw carries one of
// these codes so callers and tests can dispatch without parsing messages.
enum class errc {
  empty_input,
  out_of_range,
  duplicate_image,
  repeated_element,
  degree_mismatch,
  bound_too_small,
  invalid_sequence,
  odd_degree,
  degree_too_small,
  dimension_too_large,
  bad_modulus,
  not_zero_one,
  bad_combination,
  duplicate_input,
  precondition_violated,
  not_distinct,
  not_odd_prime,
  too_large,
  cap_exceeded,
  non_monotonic_index,
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace permkit

#pragma once

#include <stdexcept>
#include <string>

namespace unexp {

enum class errc {
  invalid_order,
  not_prime,
  no_root_of_unity,
  division_by_zero,
  field_mismatch,
  arity_mismatch,
  index_out_of_range,
  degree_too_low,
  unsupported_parameters,
  degenerate_point,
  coincident_points,
  zero_polynomial,
  degenerate_sampling_exhausted,
  resource_guard,
  parse_error,
  internal,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace unexp

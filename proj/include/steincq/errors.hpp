#pragma once

#include <stdexcept>
#include <string>

namespace steincq {

enum class Errc {
  not_hermitian,
  not_psd,
  trace_mismatch,
  dimension_mismatch,
  shape_mismatch,
  alpha_out_of_range,
  eps_out_of_range,
  support_violation,
  unsupported_set_kind,
  unsupported_dimension,
  enumeration_too_large,
  combinatorial_overflow,
  convergence_failure,
  non_convergence,
  infinite_robustness,
  bracket_too_wide,
  precondition_violated,
  dimension_guard,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace steincq

#pragma once

#include <stdexcept>
#include <string>

namespace pathheaps {

enum class errc {
  bad_symbol,
  not_below,
  bad_ceiling,
  invalid_heap,
  invalid_matching,
  invalid_step_sequence,
  not_generalized_dyck,
  mismatch,
  enumeration_too_large,
  substitution_makes_negative_xy,
  non_invertible_constant_term,
  non_polynomial_result,
  non_polynomial_coefficient,
  invalid_input,
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) {
  throw error(c, msg);
}

}  // namespace pathheaps

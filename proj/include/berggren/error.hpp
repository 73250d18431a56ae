#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berggren {

enum class error_code {
  not_pythagorean,
  not_primitive,
  non_positive,
  both_legs_same_parity,
  non_integral_result,
  invariant_violation,
  collinear_points,
  invalid_path,
  invalid_euclid_pair,
};

constexpr std::string_view name(error_code code) {
  switch (code) {
    case error_code::not_pythagorean: return "NotPythagorean";
    case error_code::not_primitive: return "NotPrimitive";
    case error_code::non_positive: return "NonPositive";
    case error_code::both_legs_same_parity: return "BothLegsSameParity";
    case error_code::non_integral_result: return "NonIntegralResult";
    case error_code::invariant_violation: return "InvariantViolation";
    case error_code::collinear_points: return "CollinearPoints";
    case error_code::invalid_path: return "InvalidPath";
    case error_code::invalid_euclid_pair: return "InvalidEuclidPair";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(error_code code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  error_code code() const noexcept { return code_; }

 private:
  error_code code_;
};

}  // namespace berggren

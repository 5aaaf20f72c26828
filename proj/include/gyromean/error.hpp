#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gyromean {

enum class Errc {
  not_hermitian,
  no_convergence,
  not_positive_definite,
  dimension_mismatch,
  singular,
  weight_out_of_range,
  not_density,
  not_in_ball,
  non_positive_argument,
  not_unit_determinant,
  length_mismatch,
  non_positive_entry,
  unknown_case,
  generation_failure,
  invalid_argument,
  parse_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_hermitian: return "NotHermitian";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::not_positive_definite: return "NotPositiveDefinite";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::singular: return "Singular";
    case Errc::weight_out_of_range: return "WeightOutOfRange";
    case Errc::not_density: return "NotDensity";
    case Errc::not_in_ball: return "NotInBall";
    case Errc::non_positive_argument: return "NonPositiveArgument";
    case Errc::not_unit_determinant: return "NotUnitDeterminant";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::non_positive_entry: return "NonPositiveEntry";
    case Errc::unknown_case: return "UnknownCase";
    case Errc::generation_failure: return "GenerationFailure";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gyromean

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdo {

enum class errc {
  negative_odd_weight,
  edge_case_a1,
  division_by_zero,
  not_a_unit,
  not_homogeneous,
  zero_element,
  ring_mismatch,
  not_invertible,
  odd_valuation,
  bad_root,
  valuation_too_low,
  not_invariant,
  edge_case_weight_zero,
  precision_required,
  parity_mismatch,
  proportionality_failure,
  not_unimodular,
  unknown_suite,
  invalid_argument,
  consistency_failure,
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::negative_odd_weight: return "NegativeOddWeight";
    case errc::edge_case_a1: return "EdgeCaseA1";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_a_unit: return "NotAUnit";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::zero_element: return "ZeroElement";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_invertible: return "NotInvertible";
    case errc::odd_valuation: return "OddValuation";
    case errc::bad_root: return "BadRoot";
    case errc::valuation_too_low: return "ValuationTooLow";
    case errc::not_invariant: return "NotInvariant";
    case errc::edge_case_weight_zero: return "EdgeCaseWeightZero";
    case errc::precision_required: return "PrecisionRequired";
    case errc::parity_mismatch: return "ParityMismatch";
    case errc::proportionality_failure: return "ProportionalityFailure";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::consistency_failure: return "ConsistencyFailure";
  }
  return "Unknown";
}

// Every domain failure of the library is one of these.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace pdo

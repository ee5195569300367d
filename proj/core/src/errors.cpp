#include "unexp/errors.hpp"

namespace unexp {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_order: return "InvalidOrder";
    case errc::not_prime: return "NotPrime";
    case errc::no_root_of_unity: return "NoRootOfUnity";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::degree_too_low: return "DegreeTooLow";
    case errc::unsupported_parameters: return "UnsupportedParameters";
    case errc::degenerate_point: return "DegeneratePoint";
    case errc::coincident_points: return "CoincidentPoints";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::degenerate_sampling_exhausted: return "DegenerateSamplingExhausted";
    case errc::resource_guard: return "ResourceGuard";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace unexp

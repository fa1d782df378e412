#include "tiqm/errors.hpp"

namespace tiqm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::range: return "range";
    case ErrorCode::singular_configuration: return "singular_configuration";
    case ErrorCode::divergence_band: return "divergence_band";
    case ErrorCode::zero_state: return "zero_state";
    case ErrorCode::non_convergence: return "non_convergence";
    case ErrorCode::not_normalized: return "not_normalized";
    case ErrorCode::not_hermitian: return "not_hermitian";
    case ErrorCode::config: return "config";
  }
  return "unknown";
}

}  // namespace tiqm

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiqm {

enum class ErrorCode {
  domain,
  range,
  singular_configuration,
  divergence_band,
  zero_state,
  non_convergence,
  not_normalized,
  not_hermitian,
  config,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so sweeps can record it
// per row instead of aborting.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tiqm

#pragma once

#include <stdexcept>
#include <string>

namespace binf {

enum class ErrorCode {
  InvalidArgument,
  UnsupportedType,
  InvalidTableau,
  InvalidWord,
  LimitExceeded,
};

/// All library failures are reported as binf::Error; the C API maps the
/// code onto binf_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace binf

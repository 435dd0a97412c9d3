#pragma once

#include <stdexcept>
#include <string>

namespace madcc {

enum class Errc {
  invalid_parameters,
  out_of_range,
  unsupported_field,
  malformed_input,
  duplicate_rows,
  precondition_failed,
  construction_unsupported,
  not_applicable,
  consistency_violation,
  protocol_violation,
  decode_failure,
};

const char* errc_name(Errc c);

/// Library-wide exception carrying a stable error code. The code, not the
/// message text, is the contract callers may dispatch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace madcc

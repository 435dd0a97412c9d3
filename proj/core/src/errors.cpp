#include "madcc/errors.hpp"

namespace madcc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::out_of_range: return "out-of-range";
    case Errc::unsupported_field: return "unsupported-field";
    case Errc::malformed_input: return "malformed-input";
    case Errc::duplicate_rows: return "duplicate-rows";
    case Errc::precondition_failed: return "precondition-failed";
    case Errc::construction_unsupported: return "construction-unsupported";
    case Errc::not_applicable: return "not-applicable";
    case Errc::consistency_violation: return "consistency-violation";
    case Errc::protocol_violation: return "protocol-violation";
    case Errc::decode_failure: return "decode-failure";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace madcc

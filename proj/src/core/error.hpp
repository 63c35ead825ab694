#pragma once

#include <stdexcept>
#include <string>

namespace charsum {

// Error conditions surfaced by the core. The C API maps these 1:1 to
// cs_status codes; names are part of the CLI's stderr contract.
enum class Errc {
    Ok = 0,
    CompositeOrEvenP,
    FieldTooLarge,
    DivisionByZero,
    MixedFields,
    LogOfZero,
    BadModulus,
    OrderDoesNotDivide,
    ZeroParameter,
    EqualParameters,
    BadResidueClass,
    DegenerateDiscriminant,
    BadLambda,
    SingularLambda,
    SingularModel,
    EvenDegreeModel,
    NonIntegralResult,
    UnsupportedGenus,
    UnsupportedFamily,
    NoRepresentation,
    SnapFailed,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace charsum

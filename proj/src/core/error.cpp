#include "error.hpp"

namespace charsum {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::Ok: return "Ok";
    case Errc::CompositeOrEvenP: return "CompositeOrEvenP";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::BadModulus: return "BadModulus";
    case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::EqualParameters: return "EqualParameters";
    case Errc::BadResidueClass: return "BadResidueClass";
    case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case Errc::BadLambda: return "BadLambda";
    case Errc::SingularLambda: return "SingularLambda";
    case Errc::SingularModel: return "SingularModel";
    case Errc::EvenDegreeModel: return "EvenDegreeModel";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::UnsupportedGenus: return "UnsupportedGenus";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::NoRepresentation: return "NoRepresentation";
    case Errc::SnapFailed: return "SnapFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace charsum

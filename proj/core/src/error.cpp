#include "apolar/error.hpp"

namespace apolar {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroInversion: return "ZeroInversion";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::VarSetMismatch: return "VarSetMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::TNotInIdeal: return "TNotInIdeal";
    case Errc::EOutOfRange: return "EOutOfRange";
    case Errc::PointsNotApolar: return "PointsNotApolar";
    case Errc::NotBinary: return "NotBinary";
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::NotCIShape: return "NotCIShape";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NOutOfRange: return "NOutOfRange";
    case Errc::MixedDegrees: return "MixedDegrees";
    case Errc::EmptyGeneratorList: return "EmptyGeneratorList";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonHomogeneous: return "NonHomogeneous";
    case Errc::UnknownVariable: return "UnknownVariable";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string module, const std::string& message)
    : std::runtime_error(message), code_(code), module_(std::move(module)) {}

void raise(Errc code, std::string_view module, const std::string& message) {
  throw Error(code, std::string(module), message);
}

}  // namespace apolar

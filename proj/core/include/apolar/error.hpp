#ifndef APOLAR_ERROR_HPP
#define APOLAR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace apolar {

enum class Errc {
  ZeroInversion,
  NotInvertible,
  InvalidInput,
  VarSetMismatch,
  AmbientMismatch,
  ZeroForm,
  DuplicatePoint,
  FieldMismatch,
  DegreeMismatch,
  TNotInIdeal,
  EOutOfRange,
  PointsNotApolar,
  NotBinary,
  NotMonomial,
  ParameterOutOfRange,
  NotCIShape,
  HypothesisViolated,
  NOutOfRange,
  MixedDegrees,
  EmptyGeneratorList,
  SyntaxError,
  NonHomogeneous,
  UnknownVariable,
};

const char* errc_name(Errc code);

// Every failure raised by the library. `module()` names the component that
// detected the problem so front ends can report it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string module, const std::string& message);

  Errc code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  Errc code_;
  std::string module_;
};

[[noreturn]] void raise(Errc code, std::string_view module, const std::string& message);

}  // namespace apolar

#endif

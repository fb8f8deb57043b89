#ifndef LEIBALG_ERROR_HPP
#define LEIBALG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibalg {

enum class Errc {
  CompositeModulus,
  MalformedSpec,
  DivisionByZero,
  FieldMismatch,
  InfiniteField,
  DimensionMismatch,
  SingularMatrix,
  EmptyAmbient,
  ShapeMismatch,
  ZeroLambda,
  NotLeibniz,
  SingularParams,
  FieldTooLarge,
  ShapeUnsupported,
  NotInFamily,
  SingularInput,
  NotAGroup,
  NotFactorable,
  NotSubset,
  PartialMap,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::CompositeModulus: return "CompositeModulus";
    case Errc::MalformedSpec: return "MalformedSpec";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::EmptyAmbient: return "EmptyAmbient";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroLambda: return "ZeroLambda";
    case Errc::NotLeibniz: return "NotLeibniz";
    case Errc::SingularParams: return "SingularParams";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ShapeUnsupported: return "ShapeUnsupported";
    case Errc::NotInFamily: return "NotInFamily";
    case Errc::SingularInput: return "SingularInput";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotFactorable: return "NotFactorable";
    case Errc::NotSubset: return "NotSubset";
    case Errc::PartialMap: return "PartialMap";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace leibalg

#endif  // LEIBALG_ERROR_HPP

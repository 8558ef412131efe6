#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsv {

/// Malformed user input: bad expressions, bad problem files, bad flags.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Expression syntax error carrying the 0-based character offset.
class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A mathematical precondition of an operation does not hold.
class MathError : public std::runtime_error {
public:
  enum class Kind {
    NotTangent,
    InfiniteDimensional,
    NotGorenstein,
    SocleZero,
    RadicalMismatch,
    NotDivisible,
    Parity,
    BudgetExceeded,
    BoundaryZero,
    TracingFailure,
    NonTransversalBoundary,
    MultipleZero,
  };

  MathError(Kind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what),
        kind_(kind) {}

  Kind kind() const { return kind_; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::NotTangent: return "NotTangent";
      case Kind::InfiniteDimensional: return "InfiniteDimensional";
      case Kind::NotGorenstein: return "NotGorenstein";
      case Kind::SocleZero: return "SocleZero";
      case Kind::RadicalMismatch: return "RadicalMismatch";
      case Kind::NotDivisible: return "NotDivisible";
      case Kind::Parity: return "ParityError";
      case Kind::BudgetExceeded: return "BudgetExceeded";
      case Kind::BoundaryZero: return "BoundaryZero";
      case Kind::TracingFailure: return "TracingFailure";
      case Kind::NonTransversalBoundary: return "NonTransversalBoundary";
      case Kind::MultipleZero: return "MultipleZero";
    }
    return "MathError";
  }

private:
  Kind kind_;
};

}  // namespace gsv

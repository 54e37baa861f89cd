#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace facering {

/// Failure categories raised by the library. The CLI maps each category onto
/// an exit code (see `exit_code_for`).
enum class ErrorKind {
  Parse,
  InvalidComplex,
  Dimension,
  NotAFace,
  Purity,
  NotIncidenceLike,
  InvalidModulus,
  Homogeneity,
  Monomial,
  Equigeneration,
  Arity,
  NotArtinian,
  Coloring,
  Range,
  Input,
  Precondition,
  Hypothesis,
  Falsification,
};

constexpr std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::Purity: return "PurityError";
    case ErrorKind::NotIncidenceLike: return "NotIncidenceLike";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::Homogeneity: return "HomogeneityError";
    case ErrorKind::Monomial: return "MonomialError";
    case ErrorKind::Equigeneration: return "EquigenerationError";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::Coloring: return "ColoringError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Input: return "InputError";
    case ErrorKind::Precondition: return "PreconditionError";
    case ErrorKind::Hypothesis: return "HypothesisError";
    case ErrorKind::Falsification: return "FalsificationEvent";
  }
  return "Error";
}

/// 2 parse error, 3 precondition violation, 4 hypothesis failure,
/// 5 a property the theory guarantees was observed to be false.
constexpr int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Hypothesis: return 4;
    case ErrorKind::Falsification: return 5;
    default: return 3;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
 public:
  explicit KindedError(const std::string& message) : Error(K, message) {}
};

using ParseError = KindedError<ErrorKind::Parse>;
using InvalidComplex = KindedError<ErrorKind::InvalidComplex>;
using DimensionError = KindedError<ErrorKind::Dimension>;
using NotAFace = KindedError<ErrorKind::NotAFace>;
using PurityError = KindedError<ErrorKind::Purity>;
using NotIncidenceLike = KindedError<ErrorKind::NotIncidenceLike>;
using InvalidModulus = KindedError<ErrorKind::InvalidModulus>;
using HomogeneityError = KindedError<ErrorKind::Homogeneity>;
using MonomialError = KindedError<ErrorKind::Monomial>;
using EquigenerationError = KindedError<ErrorKind::Equigeneration>;
using ArityError = KindedError<ErrorKind::Arity>;
using NotArtinian = KindedError<ErrorKind::NotArtinian>;
using ColoringError = KindedError<ErrorKind::Coloring>;
using RangeError = KindedError<ErrorKind::Range>;
using InputError = KindedError<ErrorKind::Input>;
using PreconditionError = KindedError<ErrorKind::Precondition>;
using HypothesisError = KindedError<ErrorKind::Hypothesis>;
using FalsificationError = KindedError<ErrorKind::Falsification>;

}  // namespace facering

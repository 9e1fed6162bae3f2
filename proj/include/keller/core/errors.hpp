#pragma once

#include <stdexcept>
#include <string>

namespace keller {

// Every failure raised by the toolkit derives from Error and carries a kind
// that the CLI maps onto an exit code.
enum class ErrorKind {
  DivisionInexact,
  UndefinedResultant,
  ZeroInput,
  ConstantPolynomial,
  DegreeCapExceeded,
  InversionOfZero,
  InvalidProjectivePoint,
  DegeneratePencil,
  NotIrreducible,
  InfiniteBaseLocus,
  NotIndeterminate,
  BlowupBudgetExceeded,
  HypothesisNotCertified,
  InstabilityDetected,
  WitnessConstructionFailed,
  ShearDisagreement,
  UnmatchedComponent,
  NoApplicableMaps,
  Parse,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Raised when an algebraic extension would exceed the configured degree cap.
// The offending minimal polynomial is carried verbatim.
class DegreeCapError : public Error {
public:
  DegreeCapError(std::string min_poly, int degree, int cap)
      : Error(ErrorKind::DegreeCapExceeded,
              "minimal polynomial " + min_poly + " has degree " + std::to_string(degree) +
                  " > cap " + std::to_string(cap)),
        min_poly_(std::move(min_poly)), degree_(degree) {}

  const std::string& min_poly() const noexcept { return min_poly_; }
  int degree() const noexcept { return degree_; }

private:
  std::string min_poly_;
  int degree_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(ErrorKind::Parse, msg + " at line " + std::to_string(line) + ", column " +
                                    std::to_string(column)),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace keller

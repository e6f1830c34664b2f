#pragma once

#include <stdexcept>
#include <string>

namespace lmcat {

enum class ErrorKind {
  InvalidInput,     // violates a type invariant or precondition
  DegenerateMetric, // EG - F^2 vanishes at the evaluation point
  Evaluation,       // non-finite function value during a solve
  IterationLimit,
  NoSignChange,
  OutOfScope,       // e.g. unequal radii for the sine families
  Inadmissible,     // (class, causal character) is not a catenoid cell
  FullySingular,    // tessellation range lies inside the exclusion zone
  Io,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::DegenerateMetric: return "degenerate metric";
    case ErrorKind::Evaluation: return "evaluation error";
    case ErrorKind::IterationLimit: return "iteration limit";
    case ErrorKind::NoSignChange: return "no sign change";
    case ErrorKind::OutOfScope: return "out of scope";
    case ErrorKind::Inadmissible: return "inadmissible cell";
    case ErrorKind::FullySingular: return "fully singular range";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lmcat

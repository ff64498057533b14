#pragma once

#include <stdexcept>
#include <string>

namespace hqp {

// Base class for all engine errors. `kind` is a stable machine-readable tag
// that the CLI and HTTP layer forward verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct StructuralError : Error {
  explicit StructuralError(const std::string& m) : Error("StructuralError", m) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& m) : Error("PreconditionError", m) {}
};
struct DivisionError : Error {
  DivisionError(const std::string& m, std::string remainder)
      : Error("DivisionError", m), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};
struct DegeneratePotential : Error {
  explicit DegeneratePotential(const std::string& m) : Error("DegeneratePotential", m) {}
};
struct NotLocallyFreeWitness : Error {
  explicit NotLocallyFreeWitness(const std::string& m) : Error("NotLocallyFreeWitness", m) {}
};
struct NonPolynomialCount : Error {
  explicit NonPolynomialCount(const std::string& m) : Error("NonPolynomialCount", m) {}
};
struct GenericityFailure : Error {
  explicit GenericityFailure(const std::string& m) : Error("GenericityFailure", m) {}
};
struct NotApplicable : Error {
  explicit NotApplicable(const std::string& m) : Error("NotApplicable", m) {}
};
struct TruncationLoss : Error {
  explicit TruncationLoss(const std::string& m) : Error("TruncationLoss", m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

}  // namespace hqp

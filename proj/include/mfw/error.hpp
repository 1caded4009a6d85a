#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mfw {

/// Broad failure classes; the CLI maps each one to an exit code.
enum class ErrorCategory {
  Verification,  // an identity that should hold does not (exit 1)
  Parse,         // malformed input text (exit 2)
  Precondition,  // a mathematical premise is violated (exit 3)
  Budget,        // a window computation would exceed its budget (exit 4)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string kind, const std::string& message)
      : std::runtime_error(message), category_(category), kind_(std::move(kind)) {}

  ErrorCategory category() const { return category_; }
  const std::string& kind() const { return kind_; }

  /// Extra key=value fields for machine-readable reports.
  virtual std::vector<std::pair<std::string, std::string>> fields() const { return {}; }

 private:
  ErrorCategory category_;
  std::string kind_;
};

// ---- parsing --------------------------------------------------------------

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCategory::Parse, "SyntaxError",
              "syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }
  std::vector<std::pair<std::string, std::string>> fields() const override {
    return {{"position", std::to_string(position_)}};
  }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  UnknownVariable(std::size_t position, const std::string& name)
      : Error(ErrorCategory::Parse, "UnknownVariable",
              "unknown variable '" + name + "' at position " + std::to_string(position)),
        position_(position), name_(name) {}
  std::size_t position() const { return position_; }
  const std::string& name() const { return name_; }
  std::vector<std::pair<std::string, std::string>> fields() const override {
    return {{"position", std::to_string(position_)}, {"variable", name_}};
  }

 private:
  std::size_t position_;
  std::string name_;
};

class DivisionByZeroInCoefficient : public Error {
 public:
  explicit DivisionByZeroInCoefficient(std::size_t position)
      : Error(ErrorCategory::Parse, "DivisionByZeroInCoefficient",
              "coefficient denominator vanishes at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }
  std::vector<std::pair<std::string, std::string>> fields() const override {
    return {{"position", std::to_string(position_)}};
  }

 private:
  std::size_t position_;
};

/// Malformed workbench file (unknown section, missing key, dangling name).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(ErrorCategory::Parse, "FormatError", "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }
  std::vector<std::pair<std::string, std::string>> fields() const override {
    return {{"line", std::to_string(line_)}};
  }

 private:
  std::size_t line_;
};

// ---- operand compatibility -------------------------------------------------

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what)
      : Error(ErrorCategory::Precondition, "FieldMismatch", what) {}
};

class VariableMismatch : public Error {
 public:
  explicit VariableMismatch(const std::string& what)
      : Error(ErrorCategory::Precondition, "VariableMismatch", what) {}
};

class LevelMismatch : public Error {
 public:
  explicit LevelMismatch(const std::string& what)
      : Error(ErrorCategory::Precondition, "LevelMismatch", what) {}
};

class TowerMismatch : public Error {
 public:
  explicit TowerMismatch(const std::string& what)
      : Error(ErrorCategory::Precondition, "TowerMismatch", what) {}
};

class EndpointMismatch : public Error {
 public:
  explicit EndpointMismatch(const std::string& what)
      : Error(ErrorCategory::Precondition, "EndpointMismatch", what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorCategory::Verification, "DimensionMismatch", what) {}
};

// ---- mathematical premises ---------------------------------------------------

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what)
      : Error(ErrorCategory::Precondition, "NotDivisible", what) {}
};

class NotHomogeneous : public Error {
 public:
  explicit NotHomogeneous(const std::string& what)
      : Error(ErrorCategory::Precondition, "NotHomogeneous", what) {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error(ErrorCategory::Precondition, "ZeroVector", "coordinate vector of x is zero") {}
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : Error(ErrorCategory::Precondition, "PreconditionViolation", what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCategory::Precondition, "InvalidArgument", what) {}
};

// ---- failed identities -------------------------------------------------------

/// An entrywise matrix identity failed. Row and column are zero-based.
class EntryViolation : public Error {
 public:
  EntryViolation(std::string kind, std::string identity, std::size_t row, std::size_t col,
                 std::string expected, std::string found)
      : Error(ErrorCategory::Verification, kind,
              kind + ": " + identity + " fails at entry (" + std::to_string(row + 1) + ", " +
                  std::to_string(col + 1) + "): expected " + expected + ", found " + found),
        identity_(std::move(identity)), row_(row), col_(col),
        expected_(std::move(expected)), found_(std::move(found)) {}

  const std::string& identity() const { return identity_; }
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

  std::vector<std::pair<std::string, std::string>> fields() const override {
    return {{"identity", identity_},
            {"row", std::to_string(row_ + 1)},
            {"col", std::to_string(col_ + 1)}};
  }

 private:
  std::string identity_;
  std::size_t row_, col_;
  std::string expected_, found_;
};

class AxiomViolation : public EntryViolation {
 public:
  AxiomViolation(std::string identity, std::size_t row, std::size_t col, std::string expected,
                 std::string found)
      : EntryViolation("AxiomViolation", std::move(identity), row, col, std::move(expected),
                       std::move(found)) {}
};

class CommutationViolation : public EntryViolation {
 public:
  CommutationViolation(std::string identity, std::size_t row, std::size_t col,
                       std::string expected, std::string found)
      : EntryViolation("CommutationViolation", std::move(identity), row, col,
                       std::move(expected), std::move(found)) {}
};

class HomotopyViolation : public EntryViolation {
 public:
  HomotopyViolation(std::string identity, std::size_t row, std::size_t col, std::string expected,
                    std::string found)
      : EntryViolation("HomotopyViolation", std::move(identity), row, col, std::move(expected),
                       std::move(found)) {}
};

/// An internal identity that the algorithms guarantee did not hold.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what)
      : Error(ErrorCategory::Verification, "VerificationFailure", what) {}
};

class WindowTooLargeForBudget : public Error {
 public:
  explicit WindowTooLargeForBudget(const std::string& what)
      : Error(ErrorCategory::Budget, "WindowTooLargeForBudget", what) {}
};

}  // namespace mfw

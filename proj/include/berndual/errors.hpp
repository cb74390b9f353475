#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace berndual {

/// Precondition violated by the caller (bad index, degree, dimension...).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Expression text could not be parsed. `offset` is the byte offset of the
/// offending token in the source string.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A function evaluation failed: a domain error inside an expression, or a
/// non-finite value where a finite one is required. Carries the abscissa
/// when known.
class EvaluationError : public std::runtime_error {
public:
  explicit EvaluationError(const std::string& what,
                           std::optional<double> x = std::nullopt)
      : std::runtime_error(what), x_(x) {}

  std::optional<double> x() const noexcept { return x_; }

private:
  std::optional<double> x_;
};

/// Band elimination met a vanishing pivot.
class SingularSystemError : public std::runtime_error {
public:
  explicit SingularSystemError(std::size_t row)
      : std::runtime_error("singular system: vanishing pivot in row " +
                           std::to_string(row)),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

/// Failure inside one iteration of the boundary value solver, labelled with
/// the degree n of the iterate being computed.
class SolveError : public std::runtime_error {
public:
  enum class Cause { evaluation, singular_system, boundary_check };

  SolveError(int iteration, Cause cause, const std::string& detail)
      : std::runtime_error("iteration n = " + std::to_string(iteration) +
                           ": " + detail),
        iteration_(iteration), cause_(cause) {}

  int iteration() const noexcept { return iteration_; }
  Cause cause() const noexcept { return cause_; }

private:
  int iteration_;
  Cause cause_;
};

}  // namespace berndual

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace efpm {

/// Raised when a value violates a domain constraint. `field()` names the
/// offending input ("rets", "dets", "level", ...).
class ValidationError : public std::invalid_argument {
public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// Fewer points than a simple regression needs (n < 3).
class InsufficientDataError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Every x value is identical, so the slope is undefined.
class DegeneratePredictorError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A positioned diagnostic from one of the text readers (.fps or .csv).
struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  std::string offending_text;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

std::string to_string(const ParseError& e);

/// Either a parsed value or every error found in the input.
template <typename T>
class Parsed {
public:
  Parsed(T value) : state_(std::move(value)) {}
  Parsed(std::vector<ParseError> errors) : state_(std::move(errors)) {}

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }
  const std::vector<ParseError>& errors() const& {
    return std::get<std::vector<ParseError>>(state_);
  }

private:
  std::variant<T, std::vector<ParseError>> state_;
};

}  // namespace efpm

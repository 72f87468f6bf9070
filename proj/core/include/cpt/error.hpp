#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpt {

enum class ErrorKind {
  index_out_of_range,
  negative_factor,
  dimension_mismatch,
  order_mismatch,
  empty_family,
  undefined_norm,
  wrong_dimension,
  bad_subset,
  domain_error,
  not_diagonal,
  invalid_decomposition,
  search_space_too_large,
  invalid_argument,
  capacity_exceeded,
  parse_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input text; `line` and `column` are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::parse_error, message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cpt

#pragma once

#include <stdexcept>
#include <string>

namespace coc {

// A term or script is rejected: ill-typed, unbound, or otherwise invalid.
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bug or exhausted safety bound; never a legitimate "no" answer.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FuelExhausted : public InternalError {
 public:
  using InternalError::InternalError;
};

struct SourceLocation {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceLocation where)
      : std::runtime_error(message), where_(where) {}
  SourceLocation where() const { return where_; }

 private:
  SourceLocation where_;
};

}  // namespace coc

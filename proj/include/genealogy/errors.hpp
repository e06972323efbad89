#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace genealogy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

/// Violated structural limit or malformed record handed to the store.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class UnknownAuthorError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class DanglingReferenceError : public Error {
 public:
  using Error::Error;
};

class AmbiguousAuthorError : public Error {
 public:
  using Error::Error;
};

/// Input error tied to a position in a corpus file.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class MissingFieldError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace genealogy

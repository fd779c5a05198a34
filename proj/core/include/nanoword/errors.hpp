#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nanoword {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: bad records, bad phrases, unknown names.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// One or more letters do not occur exactly twice.
class LetterCountError : public ValidationError {
 public:
  using Count = std::pair<std::string, std::size_t>;

  explicit LetterCountError(std::vector<Count> counts);

  /// Every offending letter with its actual number of occurrences.
  const std::vector<Count>& counts() const noexcept { return counts_; }

 private:
  std::vector<Count> counts_;
};

class UnknownSymbol : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownName : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& message);

  /// 1-based line number, 0 when the problem is not tied to a line.
  std::size_t line() const noexcept { return line_; }
  /// The message without the line prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A move site no longer matches the phrase it is applied to.
class StaleSite : public Error {
 public:
  using Error::Error;
};

/// Phrase-level invariants need R to be the graph of tau.
class NonGraphR : public Error {
 public:
  using Error::Error;
};

class ProjectionNotLifted : public Error {
 public:
  using Error::Error;
};

class ConditionsViolated : public Error {
 public:
  ConditionsViolated(std::string first, std::string second, int condition);

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }
  int condition() const noexcept { return condition_; }

 private:
  std::string first_;
  std::string second_;
  int condition_;
};

}  // namespace nanoword

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace measmean {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of budget. The best estimate so far is kept.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double best_estimate,
                  double error_estimate)
      : Error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

class UnknownMeasure : public Error {
 public:
  using Error::Error;
};

class UnknownMean : public Error {
 public:
  using Error::Error;
};

class NotDisjoint : public Error {
 public:
  using Error::Error;
};

class NotNested : public Error {
 public:
  using Error::Error;
};

class NotStrictlyInternal : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotIncreasing : public Error {
 public:
  using Error::Error;
};

/// Set-expression syntax error; offset is a byte index into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace measmean

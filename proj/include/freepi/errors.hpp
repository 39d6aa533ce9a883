#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freepi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MissingSubstituent : public Error {
 public:
  explicit MissingSubstituent(std::size_t var)
      : Error("no substitute given for x" + std::to_string(var)), var_(var) {}
  std::size_t variable() const { return var_; }

 private:
  std::size_t var_;
};

class MissingArgument : public Error {
 public:
  explicit MissingArgument(std::size_t var)
      : Error("no argument given for x" + std::to_string(var)), var_(var) {}
  std::size_t variable() const { return var_; }

 private:
  std::size_t var_;
};

class NotMultihomogeneous : public Error {
 public:
  NotMultihomogeneous() : Error("polynomial is not multihomogeneous") {}
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(unsigned degree, unsigned cap)
      : Error("total degree " + std::to_string(degree) + " exceeds degree cap " +
              std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  unsigned degree() const { return degree_; }
  unsigned cap() const { return cap_; }

 private:
  unsigned degree_;
  unsigned cap_;
};

/// Malformed polynomial text. position is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : Error("parse error at position " + std::to_string(position) + ": expected " +
              expected + ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace freepi

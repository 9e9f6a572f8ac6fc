#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabclass {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderBoundExceeded : public Error {
 public:
  using Error::Error;
};

class SearchBoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotNested : public Error {
 public:
  using Error::Error;
};

class ActionIllDefined : public Error {
 public:
  using Error::Error;
};

class SourceMismatch : public Error {
 public:
  using Error::Error;
};

class ActorMismatch : public Error {
 public:
  using Error::Error;
};

class NegativeCount : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace stabclass

#pragma once

#include <stdexcept>
#include <string>

#include "cmprob/axis.hpp"

namespace cmprob {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeEntry : public Error {
 public:
  using Error::Error;
};

class ZeroLine : public Error {
 public:
  ZeroLine(Axis axis, std::size_t index)
      : Error(std::string("zero ") +
              (axis == Axis::Horizontal ? "column " : "row ") +
              std::to_string(index)),
        axis_(axis),
        index_(index) {}
  Axis axis() const { return axis_; }
  std::size_t index() const { return index_; }

 private:
  Axis axis_;
  std::size_t index_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};
class NotComparable : public Error {
 public:
  using Error::Error;
};
class NonUniqueMeet : public Error {
 public:
  using Error::Error;
};
class NoMeet : public Error {
 public:
  using Error::Error;
};
class NotDisjoint : public Error {
 public:
  using Error::Error;
};
class InvalidParameter : public Error {
 public:
  using Error::Error;
};
class NotAnExpansion : public Error {
 public:
  using Error::Error;
};
class NonSquare : public Error {
 public:
  using Error::Error;
};
class SingularInverse : public Error {
 public:
  using Error::Error;
};
class DomainMismatch : public Error {
 public:
  using Error::Error;
};
class NonAnodyneInverse : public Error {
 public:
  using Error::Error;
};
class NoCanonicalChain : public Error {
 public:
  using Error::Error;
};
class IncompleteData : public Error {
 public:
  using Error::Error;
};
class SingularT : public Error {
 public:
  using Error::Error;
};
class CheckFailed : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmprob

#pragma once

#include <stdexcept>
#include <string>

namespace turan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

// No element of the requested multiplicative order exists in the field.
class OrderUnavailable : public Error {
 public:
  using Error::Error;
};

class NoPrimeInWindow : public Error {
 public:
  using Error::Error;
};

class ZeroPair : public Error {
 public:
  using Error::Error;
};

class PartitionViolation : public Error {
 public:
  using Error::Error;
};

class SpectrumViolation : public Error {
 public:
  using Error::Error;
};

class PaddingViolation : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BracketInvalid : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

}  // namespace turan

#ifndef DEGEN_ERRORS_HPP
#define DEGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degen {

// Base of every error the library throws. Callers that only need
// "something went wrong" can catch this one.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
public:
  using Error::Error;
};

class InvalidCutSet : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class NotAPositiveRoot : public DomainError {
public:
  using DomainError::DomainError;
};

class PreconditionViolation : public Error {
public:
  using Error::Error;
};

class ConeMembershipError : public PreconditionViolation {
public:
  using PreconditionViolation::PreconditionViolation;
};

class NotReduced : public PreconditionViolation {
public:
  using PreconditionViolation::PreconditionViolation;
};

class UnsupportedWeight : public Error {
public:
  using Error::Error;
};

// Raised when an internally cross-checked identity fails. Seeing one of
// these means a bug, not bad input.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

class LpError : public Error {
public:
  using Error::Error;
};

} // namespace degen

#endif

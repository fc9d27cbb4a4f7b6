#pragma once

#include <stdexcept>
#include <string>

namespace multconj {

/// Base class for every error raised by the library. Callers that only need
/// to distinguish "bad input" from "internal inconsistency" can catch
/// InputError or InternalMismatch respectively.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input: the caller handed us something that is
/// not a valid table, matrix or staircase.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidDiagonal : public InputError {
 public:
  using InputError::InputError;
};

class NotMonotone : public InputError {
 public:
  using InputError::InputError;
};

class CenterTooSmall : public InputError {
 public:
  using InputError::InputError;
};

class NotArtinian : public InputError {
 public:
  using InputError::InputError;
};

class NotPure : public InputError {
 public:
  using InputError::InputError;
};

class UnknownTarget : public InputError {
 public:
  using InputError::InputError;
};

/// (1-s)^c does not divide the K-polynomial: the table cannot belong to a
/// Cohen-Macaulay quotient of the declared codimension.
class DivisionError : public InputError {
 public:
  using InputError::InputError;
};

/// p! does not divide the product of the shifts of a pure table.
class DivisibilityError : public InputError {
 public:
  using InputError::InputError;
};

/// Two routes that must agree did not. Never expected; always a bug or a
/// counterexample to a theorem.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

/// Sharpness of the lower bound, sharpness of the upper bound and purity
/// disagree.
class CharacterizationViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace multconj

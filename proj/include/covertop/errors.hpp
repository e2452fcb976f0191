#pragma once

#include <stdexcept>
#include <string>

namespace covertop {

//! Malformed or inconsistent user input (unknown symbol, partial table, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

//! Subsets or relations from two different bases were combined.
class BaseMismatch : public InputError {
 public:
  using InputError::InputError;
};

//! A computation was refused because a base exceeds a configured cap.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

//! An internal invariant was violated. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace covertop

#pragma once

#include <stdexcept>
#include <string>

namespace helly {

/// Malformed user input: bad literals, dimension mismatches, zero normals.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A constructive postcondition failed. In this library that would be a
/// counterexample to one of the lattice-point lemmas, so it is never caught
/// silently.
class PostconditionFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A search gave up before reaching a decision (caps, size limits).
class SearchLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace helly

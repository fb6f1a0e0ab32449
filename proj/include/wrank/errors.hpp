#pragma once

#include <stdexcept>
#include <string>

namespace wrank {

/// Parameters outside an operation's domain (bad m, n, k, i, j, p ...).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Mismatched lengths, fields or part sizes between vectors, bases and maps.
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded.
class SizeCapError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace wrank

#pragma once

#include <stdexcept>
#include <string>

namespace movnorm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A matrix entry was NaN or infinite.
class NonFiniteEntry : public Error {
public:
  using Error::Error;
};

class NegativeLambda : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class NotNonexpansive : public Error {
public:
  using Error::Error;
};

class NotUnitary : public Error {
public:
  using Error::Error;
};

class BadGrid : public Error {
public:
  using Error::Error;
};

class BadSpec : public Error {
public:
  using Error::Error;
};

/// Malformed matrix file (syntax or missing fields).
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace movnorm

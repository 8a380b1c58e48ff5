#pragma once

#include <stdexcept>
#include <string>

namespace rootbalance {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InadmissibleRank : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class IdenticalRoots : public Error {
public:
  using Error::Error;
};

/// The exhaustive solver refused the instance. Callers must fall back on
/// certificates; this never means "not balanced".
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class AlreadyWellBalanced : public Error {
public:
  using Error::Error;
};

class NotApplicable : public Error {
public:
  using Error::Error;
};

class InvalidWitness : public Error {
public:
  using Error::Error;
};

class SpecParseError : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace rootbalance

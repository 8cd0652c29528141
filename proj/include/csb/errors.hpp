#pragma once

#include <stdexcept>
#include <string>

namespace csb {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DealiasingViolation : public Error {
public:
  using Error::Error;
};

class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class NonHermitian : public Error {
public:
  using Error::Error;
};

class NonIntegrable : public Error {
public:
  using Error::Error;
};

class SymmetricFlagInvalid : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class QuadratureNoConvergence : public Error {
public:
  using Error::Error;
};

class ConfigMismatch : public Error {
public:
  using Error::Error;
};

class TooLargeForOracle : public Error {
public:
  using Error::Error;
};

class BlowUp : public Error {
public:
  using Error::Error;
};

class NonPositiveTemperature : public Error {
public:
  using Error::Error;
};

class WrongKernelClock : public Error {
public:
  using Error::Error;
};

class ResidualTooLarge : public Error {
public:
  using Error::Error;
};

class ZeroReference : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace csb

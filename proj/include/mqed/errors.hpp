#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace mqed {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments, dimension mismatches, out-of-domain inputs.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Medium description that cannot be evaluated (singular mu, bad terms).
class InvalidModel : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, int line, int column)
      : InvalidInput(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class NotPositiveSemidefinite : public Error {
 public:
  NotPositiveSemidefinite(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Covariance of a medium that fails the passivity root test.
class NonPassiveMedium : public NotPositiveSemidefinite {
 public:
  using NotPositiveSemidefinite::NotPositiveSemidefinite;
};

// Helmholtz operator (numerically) singular at the requested point.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, Eigen::Vector3d k, std::complex<double> omega)
      : Error(what), k_(k), omega_(omega) {}
  const Eigen::Vector3d& k() const { return k_; }
  std::complex<double> omega() const { return omega_; }

 private:
  Eigen::Vector3d k_;
  std::complex<double> omega_;
};

class ResolutionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class DualitySingularity : public Error {
 public:
  using Error::Error;
};

class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mqed

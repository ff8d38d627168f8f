#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fock {

using cplx = std::complex<double>;

/// Invalid argument: out-of-range order, dimension mismatch, bad parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rule produced a non-finite value, or an exponential would overflow.
/// `where` holds the offending point (real and imaginary parts interleaved
/// for complex points).
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::vector<double> where = {})
      : std::runtime_error(what), where_(std::move(where)) {}
  const std::vector<double>& where() const noexcept { return where_; }

 private:
  std::vector<double> where_;
};

/// Point outside the region where an operation is numerically meaningful.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative method stopped without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_value, int iterations)
      : std::runtime_error(what), last_value_(last_value), iterations_(iterations) {}
  double last_value() const noexcept { return last_value_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double last_value_;
  int iterations_;
};

}  // namespace fock

#pragma once

#include <Eigen/Dense>
#include <memory>
#include <span>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

struct MultiIndex {
  std::vector<int> components;

  int degree() const;
  int dim() const { return static_cast<int>(components.size()); }
  bool operator==(const MultiIndex&) const = default;
};

/// All multi-indices in n variables with |alpha| <= N, graded by degree and
/// lexicographically descending inside a degree: (2,0), (1,1), (0,2).
/// Copies share the index table.
class TruncationBasis {
 public:
  TruncationBasis() = default;
  TruncationBasis(int n, int N);

  int n() const { return n_; }
  int max_degree() const { return N_; }
  std::size_t size() const;

  const MultiIndex& multi_index_of(std::size_t k) const;
  const MultiIndex& operator[](std::size_t k) const { return multi_index_of(k); }
  std::size_t index_of(const MultiIndex& alpha) const;

  /// Number of indices with degree <= d; graded order makes these a prefix.
  std::size_t leading_size(int d) const;

  bool operator==(const TruncationBasis& other) const { return n_ == other.n_ && N_ == other.N_; }

 private:
  struct Table;
  int n_ = 0;
  int N_ = -1;
  std::shared_ptr<const Table> table_;
};

/// Coefficients over e_alpha(z) = z^alpha / sqrt(alpha!).
struct FockVector {
  TruncationBasis basis;
  Eigen::VectorXcd coeffs;

  FockVector() = default;
  explicit FockVector(TruncationBasis b) : basis(std::move(b)), coeffs(Eigen::VectorXcd::Zero(basis.size())) {}
  FockVector(TruncationBasis b, Eigen::VectorXcd c);

  double norm() const { return coeffs.norm(); }
};

/// Coefficients over the orthonormal Hermite functions psi_alpha on R^n.
struct HermiteVector {
  TruncationBasis basis;
  Eigen::VectorXcd coeffs;

  HermiteVector() = default;
  explicit HermiteVector(TruncationBasis b) : basis(std::move(b)), coeffs(Eigen::VectorXcd::Zero(basis.size())) {}
  HermiteVector(TruncationBasis b, Eigen::VectorXcd c);

  double norm() const { return coeffs.norm(); }
};

void require_same_basis(const TruncationBasis& a, const TruncationBasis& b, const char* where);

/// psi_k(x) = (2/pi)^{1/4} (2^k k!)^{-1/2} H_k(sqrt2 x) e^{-x^2}.
double psi_1d(int k, double x);
double psi_eval(const MultiIndex& alpha, std::span<const double> x);

/// Table T(k, i) = psi_k(xs[i]) for k = 0..kmax. The recurrence runs on
/// log-scaled values, so entries underflow to zero gracefully far out.
Eigen::MatrixXd hermite_function_table(int kmax, std::span<const double> xs);

/// psi_k(x) / psi_0(x) for k = 0..kmax (a polynomial, never underflows).
Eigen::VectorXd hermite_ratio_row(int kmax, double x);

/// Largest |z|^2 at which Fock-space evaluations are attempted.
inline constexpr double kFockOverflowGuard = 700.0;

cplx fock_eval(const FockVector& F, std::span<const cplx> z);
cplx reproducing_kernel(std::span<const cplx> z, std::span<const cplx> w);
cplx weyl_apply(const FockVector& F, std::span<const double> a, std::span<const cplx> z);

/// Coefficients of W_a F on the same basis. The generator z - d/dz is
/// exponentiated on a padded basis and the result truncated back, so only
/// the compression tail is lost.
FockVector weyl_coeffs(const FockVector& F, std::span<const double> a);

}  // namespace fock

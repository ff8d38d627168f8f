#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>

#include "fock/hermite.hpp"
#include "fock/multiplier.hpp"
#include "fock/quadrature.hpp"
#include "fock/symbol.hpp"

namespace fock {

/// Compression of S_phi to a truncation basis. Rows index the output
/// multi-index, columns the input.
struct OperatorMatrix {
  TruncationBasis basis;
  Eigen::MatrixXcd entries;
  std::string source;
  std::uint64_t source_hash = 0;
  int order = 0;
};

/// S_{alpha beta} = i^{|alpha| - |beta|} ∫ m psi_alpha psi_beta dx.
/// Requires rule.order >= 2(N + 1).
OperatorMatrix build_matrix(const Multiplier& m, const TruncationBasis& basis, const QuadratureRule& rule);

/// Quadrature order used when the caller does not pin one: max(200, 4N).
int default_matrix_order(int N);

FockVector apply(const OperatorMatrix& S, const FockVector& F);

/// ∫ F(w) e^{z w̄} phi(z - w̄) dλ(w) by a tensor rule on C, one dimension only.
/// The envelope rates come from phi.growth; needs growth < 1 and order <= 400.
cplx apply_direct_quadrature(const Symbol& phi, const FockVector& F, cplx z, const QuadratureRule& rule);

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix adjoint(const OperatorMatrix& s);

/// Top-left block over the multi-indices of degree <= d.
OperatorMatrix leading_block(const OperatorMatrix& s, int d);

struct NormEstimate {
  double value = 0.0;
  int iterations = 0;
  double last_relative_change = 0.0;
  bool converged = false;
};

/// Largest singular value by power iteration on S*S, stopped at relative
/// change below 1e-10 or after 5000 iterations. The value is a lower bound.
NormEstimate operator_norm_estimate(const Eigen::MatrixXcd& s);

/// The estimate's value. Throws ConvergenceError (carrying the last iterate)
/// when the iteration cap is hit while the relative change is still above 1e-6.
double operator_norm(const Eigen::MatrixXcd& s);
double operator_norm(const OperatorMatrix& s);

/// ||AB - BA||. With block_degree >= 0 the commutator is restricted to the
/// leading block of that degree before taking the norm.
double commutator_norm(const OperatorMatrix& a, const OperatorMatrix& b, int block_degree = -1);

}  // namespace fock

#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "fock/multiplier.hpp"
#include "fock/operator.hpp"

namespace fock {

struct HermitianEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // columns, empty unless requested
  int sweeps = 0;
};

/// Cyclic complex Jacobi. Stops once the off-diagonal Frobenius norm drops
/// below 1e-12 * max(1, ||H||_F); 40 sweeps at most.
/// Input must satisfy max|H - H*| <= 1e-10.
HermitianEigen jacobi_eigh(const Eigen::MatrixXcd& h, bool want_vectors = false);

std::vector<double> hermitian_eigs(const Eigen::MatrixXcd& h);
std::vector<double> hermitian_eigs(const OperatorMatrix& h);

/// Smallest singular value, from the eigenvalues of A*A.
double min_singular_value(const Eigen::MatrixXcd& a);

enum class SpectrumClass { hermitian, anti_hermitian, unitary_symbol, general };
const char* to_string(SpectrumClass c);

/// Decides the path from sampled values of m: real, purely imaginary,
/// unimodular, or none of these.
SpectrumClass classify_values(std::span<const cplx> values);

struct ResolventProbe {
  cplx mu;
  double min_singular_value = 0.0;
};

struct SpectrumReport {
  std::vector<cplx> eigenvalues;
  std::vector<cplx> reference;
  double reference_resolution = 0.0;
  double hausdorff = 0.0;
  int N = 0;
  int order = 0;
  SpectrumClass classification = SpectrumClass::general;
  bool caveat = false;  // eigenvalues are Rayleigh quotients, not exact
  std::vector<ResolventProbe> probes;
};

struct SpectrumOptions {
  GridSpec grid;
  int max_probes = 64;
  std::size_t max_reference = 20000;
};

/// Eigenvalue estimate for a compression whose symbol class is known.
std::vector<cplx> truncated_spectrum(const OperatorMatrix& s, SpectrumClass cls);

SpectrumReport spectrum_estimate(const Multiplier& m, const TruncationBasis& basis, const QuadratureRule& rule,
                                 const SpectrumOptions& options = {});

/// Symmetric Hausdorff distance between finite subsets of C.
double hausdorff_distance(std::span<const cplx> a, std::span<const cplx> b);

/// Share of `values` lying within `radius` of some point of `targets`.
double fraction_within(std::span<const cplx> values, std::span<const cplx> targets, double radius);

struct CompactnessRow {
  int N = 0;
  int k = 0;
  double bump_norm = 0.0;      // truncated ||f_k||
  double image_norm = 0.0;     // ||S f_k||
  double ratio = 0.0;          // image_norm / bump_norm
  double max_low_inner = 0.0;  // max |<f_k, e_alpha>| over |alpha| <= low_degree
};

struct CompactnessReport {
  bool zero_operator = false;
  int low_degree = 4;
  std::vector<CompactnessRow> rows;
};

/// Shrinking bumps f_k = |E_k|^{-1/2} 1_{E_k} on the frequency side, with
/// E_k = anchor + [0, side 2^{-k}]^n, pushed through the compression of S.
CompactnessReport compactness_probe(const Multiplier& m, std::span<const int> Ns, int kmax,
                                    std::span<const double> anchor, double side = 1.0, int low_degree = 4);

/// P = S_{1_E} for a finite union of boxes E.
OperatorMatrix reducing_projection(const std::vector<Box>& boxes, const TruncationBasis& basis,
                                   const QuadratureRule& rule);

}  // namespace fock

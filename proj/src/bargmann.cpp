#include "fock/bargmann.hpp"

#include <cmath>
#include <numbers>

namespace fock {

cplx minus_i_power(int k) {
  static const cplx cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return cycle[((k % 4) + 4) % 4];
}

cplx i_power(int k) { return minus_i_power(-k); }

cplx bargmann_point(const RealPointFn& f, int n, std::span<const cplx> z, const QuadratureRule& rule) {
  if (static_cast<int>(z.size()) != n) throw ParameterError("bargmann_point: point dimension mismatch");
  const double prefactor = std::pow(2.0 / std::numbers::pi, n / 4.0);
  cplx z2 = 0.0;
  for (const cplx& v : z) z2 += v * v;
  auto integrand = [&](std::span<const double> x) {
    cplx e = -0.5 * z2;
    for (int j = 0; j < n; ++j) e += 2.0 * x[j] * z[j];
    return f(x) * std::exp(e);
  };
  return prefactor * integrate_weighted_Rn(integrand, rule, n, 1.0);
}

cplx bargmann_point(const HermiteVector& f, std::span<const cplx> z, const QuadratureRule& rule) {
  const int n = f.basis.n();
  if (static_cast<int>(z.size()) != n) throw ParameterError("bargmann_point: point dimension mismatch");
  const int N = f.basis.max_degree();
  const double c0 = std::pow(2.0 / std::numbers::pi, 0.25);
  const double prefactor = std::pow(2.0 / std::numbers::pi, n / 4.0);
  cplx z2 = 0.0;
  for (const cplx& v : z) z2 += v * v;
  // psi_alpha(x) e^{2|x|^2} factors as a polynomial times e^{-|x|^2}, so the
  // rule for e^{-2|x|^2} integrates a polynomial times e^{2x·z}.
  // One scratch table of ratio rows, reused across nodes. Row j holds
  // c0 psi_k(x_j) / psi_0(x_j) for k = 0..N.
  const std::size_t stride = static_cast<std::size_t>(N) + 1;
  std::vector<double> rows(stride * n);
  std::vector<double> up(stride), down(stride);
  for (int k = 1; k < N; ++k) {
    up[k] = std::sqrt(2.0 / (k + 1));
    down[k] = std::sqrt(double(k) / (k + 1));
  }
  auto integrand = [&](std::span<const double> x) {
    cplx e = -0.5 * z2;
    for (int j = 0; j < n; ++j) {
      double* row = rows.data() + j * stride;
      const double t = std::numbers::sqrt2 * x[j];
      row[0] = c0;
      if (N > 0) row[1] = std::numbers::sqrt2 * t * c0;
      for (int k = 1; k < N; ++k) row[k + 1] = up[k] * t * row[k] - down[k] * row[k - 1];
      e += 2.0 * x[j] * z[j];
    }
    cplx s = 0.0;
    for (std::size_t k = 0; k < f.basis.size(); ++k) {
      double p = 1.0;
      const auto& alpha = f.basis[k].components;
      for (int j = 0; j < n; ++j) p *= rows[j * stride + alpha[j]];
      s += f.coeffs[k] * p;
    }
    return s * std::exp(e);
  };
  return prefactor * integrate_weighted_Rn(integrand, rule, n, 2.0);
}

FockVector bargmann_basis(const HermiteVector& f) { return FockVector(f.basis, f.coeffs); }

HermiteVector inverse_bargmann_basis(const FockVector& F) { return HermiteVector(F.basis, F.coeffs); }

cplx inverse_bargmann_point(const FockVector& F, std::span<const double> x, const QuadratureRule& rule) {
  const int n = F.basis.n();
  if (static_cast<int>(x.size()) != n) throw ParameterError("inverse_bargmann_point: point dimension mismatch");
  const double prefactor = std::pow(2.0 / std::numbers::pi, n / 4.0) * std::pow(std::numbers::pi, -n);
  // |e^{-z̄^2/2} e^{-|z|^2}| = e^{-3u^2/2 - v^2/2}
  auto integrand = [&](std::span<const cplx> z) {
    cplx e = 0.0;
    for (int j = 0; j < n; ++j) {
      const cplx zb = std::conj(z[j]);
      e += 2.0 * x[j] * zb - x[j] * x[j] - 0.5 * zb * zb - std::norm(z[j]);
    }
    return prefactor * fock_eval(F, z) * std::exp(e);
  };
  return integrate_envelope_Cn(integrand, rule, n, 1.5, 0.5);
}

HermiteVector fourier_diagonal(const HermiteVector& f) {
  HermiteVector out(f.basis, f.coeffs);
  for (std::size_t k = 0; k < f.basis.size(); ++k) out.coeffs[k] *= minus_i_power(f.basis[k].degree());
  return out;
}

HermiteVector inverse_fourier_diagonal(const HermiteVector& f) {
  HermiteVector out(f.basis, f.coeffs);
  for (std::size_t k = 0; k < f.basis.size(); ++k) out.coeffs[k] *= i_power(f.basis[k].degree());
  return out;
}

std::vector<cplx> fourier_eigenvalues_by_quadrature(int kmax, const QuadratureRule& rule) {
  const LineRule line = gaussian_line_rule(rule, 1.0);
  const Eigen::MatrixXd table = hermite_function_table(kmax, line.nodes);
  const std::size_t q = line.size();
  // kernel(i, j) = pi^{-1/2} e^{-2i x_i y_j} w_j
  Eigen::MatrixXcd kernel(q, q);
  const double c = 1.0 / std::sqrt(std::numbers::pi);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      kernel(i, j) = c * line.weights[j] * std::polar(1.0, -2.0 * line.nodes[i] * line.nodes[j]);
    }
  }
  std::vector<cplx> out;
  for (int k = 0; k <= kmax; ++k) {
    const Eigen::VectorXcd psi = table.row(k).transpose().cast<cplx>();
    const Eigen::VectorXcd transformed = kernel * psi;
    cplx s = 0.0;
    for (std::size_t i = 0; i < q; ++i) s += line.weights[i] * psi[i] * transformed[i];
    out.push_back(s);
  }
  return out;
}

}  // namespace fock

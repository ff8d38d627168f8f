#include "fock/symbol.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <numbers>

#include "detail.hpp"
#include "fock/bargmann.hpp"

namespace fock {

cplx Symbol::operator()(std::span<const cplx> z) const {
  if (static_cast<int>(z.size()) != n) throw ParameterError("Symbol: point dimension mismatch");
  if (rule) return rule(z);
  if (coeffs) return fock_eval(*coeffs, z);
  throw ParameterError("Symbol: neither a rule nor coefficients are present");
}

Symbol symbol_from_coeffs(FockVector coeffs, std::string provenance) {
  Symbol s;
  s.n = coeffs.basis.n();
  s.coeffs = std::move(coeffs);
  s.provenance = std::move(provenance);
  return s;
}

Symbol symbol_from_multiplier(const Multiplier& m, const QuadratureRule& rule) {
  Symbol s;
  s.n = m.n;
  s.rule = [m, rule](std::span<const cplx> z) { return symbol_point(m, z, rule); };
  s.provenance = "from_multiplier";
  s.growth = 0.5;
  return s;
}

cplx symbol_point(const Multiplier& m, std::span<const cplx> z, const QuadratureRule& rule) {
  const int n = m.n;
  if (static_cast<int>(z.size()) != n) throw ParameterError("symbol_point: point dimension mismatch");
  double z2abs = 0.0;
  for (const cplx& v : z) z2abs += std::norm(v);
  if (z2abs > kFockOverflowGuard) {
    std::vector<double> where;
    for (const cplx& v : z) {
      where.push_back(v.real());
      where.push_back(v.imag());
    }
    throw EvaluationError("symbol_point: |z|^2 exceeds the overflow guard", where);
  }
  // With z = p + iq, e^{-2x^2 + 2ix z} = e^{-2(x + q/2)^2 + q^2/2} e^{2ixp}: the
  // nodes stay on the real line, recentred at -q/2.
  std::vector<LineRule> axes;
  cplx log_prefactor = 0.0;
  for (int j = 0; j < n; ++j) {
    const double p = z[j].real();
    const double q = z[j].imag();
    const std::vector<double>& br = m.breaks[j];
    axes.push_back(gaussian_line_rule(rule, 2.0, -0.5 * q, br));
    log_prefactor += cplx(0.5 * p * p, p * q);
  }
  const double c = std::pow(2.0 / std::numbers::pi, 0.5 * n);

  std::vector<std::size_t> idx(n, 0);
  std::vector<double> x(n);
  cplx sum = 0.0;
  while (true) {
    double w = 1.0;
    double env = 0.0;
    double phase = 0.0;
    for (int j = 0; j < n; ++j) {
      x[j] = axes[j].nodes[idx[j]];
      w *= axes[j].weights[idx[j]];
      const double s = x[j] + 0.5 * z[j].imag();
      env -= 2.0 * s * s;
      phase += 2.0 * x[j] * z[j].real();
    }
    const cplx v = m.eval(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationError("symbol_point: multiplier is not finite at a quadrature node", x);
    }
    sum += w * v * std::polar(std::exp(env), phase);
    int d = n - 1;
    while (d >= 0 && ++idx[d] == axes[d].size()) idx[d--] = 0;
    if (d < 0) break;
  }
  return c * std::exp(log_prefactor) * sum;
}

FockVector symbol_coeffs(const Multiplier& m, const TruncationBasis& basis, const QuadratureRule& rule) {
  if (basis.n() != m.n) throw ParameterError("symbol_coeffs: basis dimension does not match the multiplier");
  const int N = basis.max_degree();
  const detail::WeightedSamples samples = detail::sample_multiplier(m, rule, 2.0);
  std::vector<Eigen::MatrixXd> tables;
  for (const LineRule& ax : samples.axes) {
    Eigen::MatrixXd t = hermite_function_table(N, ax.nodes);
    for (Eigen::Index i = 0; i < t.cols(); ++i) t.col(i) *= t(0, i);
    tables.push_back(std::move(t));
  }
  const std::vector<double> re = detail::contract_axes(samples.re, samples.dims(), tables);
  const std::vector<double> im = detail::contract_axes(samples.im, samples.dims(), tables);

  FockVector out(basis);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const MultiIndex& alpha = basis[k];
    std::size_t flat = 0;
    for (int j = 0; j < m.n; ++j) flat = flat * (N + 1) + alpha.components[j];
    out.coeffs[k] = i_power(alpha.degree()) * cplx(re[flat], im[flat]);
  }
  return out;
}

cplx multiplier_from_symbol_coeffs(const FockVector& phi, std::span<const double> x) {
  const int n = phi.basis.n();
  if (static_cast<int>(x.size()) != n) throw ParameterError("multiplier_from_symbol_coeffs: point dimension mismatch");
  double x2 = 0.0;
  for (double v : x) x2 += v * v;
  // psi_0 drops below 1e-200 here; the ratio polynomials are fine but the
  // result would no longer mean anything.
  if (x2 > 460.0) throw DomainError("multiplier_from_symbol_coeffs: |x| too large, psi_0 underflows");
  const int N = phi.basis.max_degree();
  std::vector<Eigen::VectorXd> rows;
  for (int j = 0; j < n; ++j) rows.push_back(hermite_ratio_row(N, x[j]));
  cplx sum = 0.0;
  for (std::size_t k = 0; k < phi.basis.size(); ++k) {
    const MultiIndex& alpha = phi.basis[k];
    double r = 1.0;
    for (int j = 0; j < n; ++j) r *= rows[j][alpha.components[j]];
    sum += minus_i_power(alpha.degree()) * phi.coeffs[k] * r;
  }
  return sum;
}

cplx multiplier_from_symbol_integral(const Symbol& phi, double x, const QuadratureRule& rule) {
  if (phi.n != 1) throw ParameterError("multiplier_from_symbol_integral: only n = 1 is supported");
  if (rule.order > 40) throw ParameterError("multiplier_from_symbol_integral: order is capped at 40 per axis");
  const double kappa = phi.growth;
  if (!(kappa < 0.5)) throw ParameterError("multiplier_from_symbol_integral: symbol grows too fast (need growth < 1/2)");

  // v = (Re z, Im z, Re w, Im w). The modulus of the integrand is bounded by
  // e^{-v^T Q v} times at most polynomial growth.
  Eigen::Matrix4d Q;
  Q << 0.5 - kappa, 0.0, kappa - 0.5, 0.0,
       0.0, 1.5, 0.0, -0.5,
       kappa - 0.5, 0.0, 1.0 - kappa, 0.0,
       0.0, -0.5, 0.0, 1.0;
  const Eigen::LLT<Eigen::Matrix4d> llt(Q);
  if (llt.info() != Eigen::Success) throw ParameterError("multiplier_from_symbol_integral: envelope is not positive definite");
  const Eigen::Matrix4d L = llt.matrixL();
  const Eigen::Matrix4d map = L.transpose().inverse();  // v = map * t
  const double jacobian = 1.0 / L.diagonal().prod();
  const double inv_pi2 = 1.0 / (std::numbers::pi * std::numbers::pi);

  const int q = rule.order;
  cplx sum = 0.0;
  Eigen::Vector4d t;
  for (int i0 = 0; i0 < q; ++i0) {
    for (int i1 = 0; i1 < q; ++i1) {
      for (int i2 = 0; i2 < q; ++i2) {
        for (int i3 = 0; i3 < q; ++i3) {
          t << rule.nodes[i0], rule.nodes[i1], rule.nodes[i2], rule.nodes[i3];
          const double w = rule.modified_weights[i0] * rule.modified_weights[i1] * rule.modified_weights[i2] *
                           rule.modified_weights[i3];
          const Eigen::Vector4d v = map * t;
          const cplx z(v[0], v[1]);
          const cplx wv(v[2], v[3]);
          const cplx zb = std::conj(z);
          const cplx e = z * std::conj(wv) - cplx(0.0, 2.0) * x * zb + 0.5 * zb * zb - std::norm(z) - std::norm(wv);
          const cplx arg[1] = {z - std::conj(wv)};
          sum += w * phi(arg) * std::exp(e);
        }
      }
    }
  }
  const cplx result = inv_pi2 * jacobian * sum;
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw EvaluationError("multiplier_from_symbol_integral: non-finite result", {x});
  }
  return result;
}

Multiplier adjoint_symbol(const Multiplier& m) { return conj_multiplier(m); }

}  // namespace fock

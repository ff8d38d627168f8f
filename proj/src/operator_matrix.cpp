#include "fock/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "detail.hpp"
#include "fock/bargmann.hpp"

namespace fock {

int default_matrix_order(int N) { return std::max(200, 4 * N); }

OperatorMatrix build_matrix(const Multiplier& m, const TruncationBasis& basis, const QuadratureRule& rule) {
  const int n = basis.n();
  const int N = basis.max_degree();
  if (m.n != n) throw ParameterError("build_matrix: basis dimension does not match the multiplier");
  if (rule.order < 2 * (N + 1)) {
    throw ParameterError("build_matrix: quadrature order " + std::to_string(rule.order) + " is below 2(N+1) = " +
                         std::to_string(2 * (N + 1)));
  }
  const detail::WeightedSamples samples = detail::sample_multiplier(m, rule, 2.0);
  const std::size_t size = basis.size();
  Eigen::MatrixXd mre(size, size);
  Eigen::MatrixXd mim(size, size);

  if (n == 1) {
    const Eigen::MatrixXd t = hermite_function_table(N, samples.axes[0].nodes);
    const Eigen::Map<const Eigen::RowVectorXd> wre(samples.re.data(), samples.re.size());
    const Eigen::Map<const Eigen::RowVectorXd> wim(samples.im.data(), samples.im.size());
    mre = (t.array().rowwise() * wre.array()).matrix() * t.transpose();
    mim = (t.array().rowwise() * wim.array()).matrix() * t.transpose();
    mre = 0.5 * (mre + mre.transpose()).eval();
    mim = 0.5 * (mim + mim.transpose()).eval();
  } else {
    // Per-axis products psi_a psi_b for a <= b; the n-fold contraction
    // yields every entry as one element of a K^n tensor.
    std::vector<std::vector<std::size_t>> pair_id(N + 1, std::vector<std::size_t>(N + 1));
    std::size_t pairs = 0;
    for (int a = 0; a <= N; ++a) {
      for (int b = a; b <= N; ++b) pair_id[a][b] = pair_id[b][a] = pairs++;
    }
    if (std::pow(double(pairs), n) > 6e7) throw ParameterError("build_matrix: basis too large for the tensor contraction");
    std::vector<Eigen::MatrixXd> tables;
    for (const LineRule& ax : samples.axes) {
      const Eigen::MatrixXd t = hermite_function_table(N, ax.nodes);
      Eigen::MatrixXd p(pairs, ax.size());
      for (int a = 0; a <= N; ++a) {
        for (int b = a; b <= N; ++b) p.row(pair_id[a][b]) = t.row(a).cwiseProduct(t.row(b));
      }
      tables.push_back(std::move(p));
    }
    const std::vector<double> re = detail::contract_axes(samples.re, samples.dims(), tables);
    const std::vector<double> im = detail::contract_axes(samples.im, samples.dims(), tables);
    for (std::size_t r = 0; r < size; ++r) {
      const auto& alpha = basis[r].components;
      for (std::size_t c = 0; c < size; ++c) {
        const auto& beta = basis[c].components;
        std::size_t flat = 0;
        for (int j = 0; j < n; ++j) flat = flat * pairs + pair_id[alpha[j]][beta[j]];
        mre(r, c) = re[flat];
        mim(r, c) = im[flat];
      }
    }
  }

  OperatorMatrix out;
  out.basis = basis;
  out.order = rule.order;
  out.source = m.description;
  out.source_hash = detail::fnv1a(m.description);
  out.entries.resize(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    const int dr = basis[r].degree();
    for (std::size_t c = 0; c < size; ++c) {
      out.entries(r, c) = i_power(dr - basis[c].degree()) * cplx(mre(r, c), mim(r, c));
    }
  }
  return out;
}

FockVector apply(const OperatorMatrix& S, const FockVector& F) {
  require_same_basis(S.basis, F.basis, "apply");
  return FockVector(F.basis, S.entries * F.coeffs);
}

cplx apply_direct_quadrature(const Symbol& phi, const FockVector& F, cplx z, const QuadratureRule& rule) {
  if (phi.n != 1 || F.basis.n() != 1) throw ParameterError("apply_direct_quadrature: only n = 1 is supported");
  if (rule.order > 400) throw ParameterError("apply_direct_quadrature: order is capped at 400 per axis");
  const double kappa = std::max(0.0, phi.growth);
  if (!(kappa < 1.0)) throw ParameterError("apply_direct_quadrature: symbol grows too fast (need growth < 1)");
  auto integrand = [&](std::span<const cplx> w) {
    const cplx wb = std::conj(w[0]);
    const cplx arg[1] = {z - wb};
    return fock_eval(F, w) * phi(arg) * std::exp(z * wb - std::norm(w[0])) / std::numbers::pi;
  };
  return integrate_envelope_Cn(integrand, rule, 1, 1.0 - kappa, 1.0);
}

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a.basis, b.basis, "compose");
  OperatorMatrix out;
  out.basis = a.basis;
  out.entries = a.entries * b.entries;
  out.source = "compose(" + a.source + ";" + b.source + ")";
  out.source_hash = detail::fnv1a(out.source);
  out.order = std::min(a.order, b.order);
  return out;
}

OperatorMatrix adjoint(const OperatorMatrix& s) {
  OperatorMatrix out = s;
  out.entries = s.entries.adjoint();
  out.source = "adjoint(" + s.source + ")";
  out.source_hash = detail::fnv1a(out.source);
  return out;
}

OperatorMatrix leading_block(const OperatorMatrix& s, int d) {
  if (d < 0 || d > s.basis.max_degree()) throw ParameterError("leading_block: degree out of range");
  const Eigen::Index k = static_cast<Eigen::Index>(s.basis.leading_size(d));
  OperatorMatrix out;
  out.basis = TruncationBasis(s.basis.n(), d);
  out.entries = s.entries.topLeftCorner(k, k);
  out.source = s.source;
  out.source_hash = s.source_hash;
  out.order = s.order;
  return out;
}

NormEstimate operator_norm_estimate(const Eigen::MatrixXcd& s) {
  NormEstimate est;
  const Eigen::Index cols = s.cols();
  if (cols == 0) {
    est.converged = true;
    return est;
  }
  std::mt19937_64 gen(0x5eedULL);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(cols);
  for (Eigen::Index k = 0; k < cols; ++k) v[k] = cplx(normal(gen), normal(gen));
  v.normalize();
  double previous = 0.0;
  constexpr int kMaxIterations = 5000;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const Eigen::VectorXcd w = s * v;
    const double lambda = w.squaredNorm();
    if (!std::isfinite(lambda)) throw ConvergenceError("operator_norm: non-finite iterate", std::sqrt(previous), it);
    const Eigen::VectorXcd u = s.adjoint() * w;
    const double un = u.norm();
    est.iterations = it;
    est.value = std::sqrt(lambda);
    if (un == 0.0) {
      est.value = 0.0;
      est.converged = true;
      return est;
    }
    v = u / un;
    if (it > 1) {
      est.last_relative_change = std::abs(lambda - previous) / lambda;
      if (est.last_relative_change <= 1e-10) {
        est.converged = true;
        return est;
      }
    }
    previous = lambda;
  }
  return est;
}

double operator_norm(const Eigen::MatrixXcd& s) {
  const NormEstimate est = operator_norm_estimate(s);
  if (!est.converged && est.last_relative_change > 1e-6) {
    throw ConvergenceError("operator_norm: power iteration did not settle", est.value, est.iterations);
  }
  return est.value;
}

double operator_norm(const OperatorMatrix& s) { return operator_norm(s.entries); }

double commutator_norm(const OperatorMatrix& a, const OperatorMatrix& b, int block_degree) {
  require_same_basis(a.basis, b.basis, "commutator_norm");
  Eigen::MatrixXcd c = a.entries * b.entries - b.entries * a.entries;
  if (block_degree >= 0) {
    if (block_degree > a.basis.max_degree()) throw ParameterError("commutator_norm: block degree out of range");
    const Eigen::Index k = static_cast<Eigen::Index>(a.basis.leading_size(block_degree));
    c = c.topLeftCorner(k, k).eval();
  }
  return operator_norm(c);
}

}  // namespace fock

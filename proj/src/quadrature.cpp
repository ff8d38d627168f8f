#include "fock/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fock {
namespace {

constexpr int kMaxOrder = 4096;

// Orthonormal Hermite functions h_k(t) = p_k(t) e^{-t^2/2} exp(log_scale);
// p_k is rescaled whenever it grows past 1e200.
struct HermiteTail {
  double p_n = 0.0;
  double p_nm1 = 0.0;
  double log_scale = 0.0;
};

HermiteTail hermite_tail(int n, double t) {
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  double log_scale = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * t * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e200) {
      cur *= 1e-200;
      prev *= 1e-200;
      log_scale += 200.0 * std::numbers::ln10;
    }
  }
  return {cur, prev, log_scale};
}

void odometer_step(std::vector<int>& idx, int radix) {
  for (int d = static_cast<int>(idx.size()) - 1; d >= 0; --d) {
    if (++idx[d] < radix) return;
    idx[d] = 0;
  }
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw ParameterError("gauss_hermite: order must be in [1, 4096], got " + std::to_string(order));
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.modified_weights.resize(order);

  std::vector<double> guess(order, 0.0);
  if (order > 1) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(order - 1);
    for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (int k = 0; k < order; ++k) guess[k] = solver.eigenvalues()[k];
  }

  // Newton polish on the nonnegative half, mirrored onto the negative half.
  const int half = order / 2;
  for (int k = order - 1; k >= half; --k) {
    double t = (order % 2 == 1 && k == half) ? 0.0 : guess[k];
    if (!(order % 2 == 1 && k == half)) {
      for (int it = 0; it < 12; ++it) {
        const HermiteTail h = hermite_tail(order, t);
        const double deriv = std::sqrt(2.0 * order) * h.p_nm1 - t * h.p_n;
        const double step = h.p_n / deriv;
        t -= step;
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(t))) break;
      }
    }
    const HermiteTail h = hermite_tail(order, t);
    const double log_h_nm1 = std::log(std::abs(h.p_nm1)) + h.log_scale - 0.5 * t * t;
    const double log_modified = -std::log(double(order)) - 2.0 * log_h_nm1;
    const int mirror = order - 1 - k;
    rule.nodes[k] = t;
    rule.nodes[mirror] = -t;
    rule.modified_weights[k] = rule.modified_weights[mirror] = std::exp(log_modified);
    rule.weights[k] = rule.weights[mirror] = std::exp(log_modified - t * t);
  }
  return rule;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw ParameterError("gauss_legendre: order must be in [1, 4096], got " + std::to_string(order));
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = order == 1 ? x : p1;
      const double pnm1 = order == 1 ? 1.0 : p0;
      dp = order * (x * pn - pnm1) / (x * x - 1.0);
      const double step = pn / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  rule.modified_weights = rule.weights;
  return rule;
}

LineRule gaussian_line_rule(const QuadratureRule& gh, double rate, double center,
                            std::span<const double> breaks) {
  if (!(rate > 0.0)) throw ParameterError("gaussian_line_rule: rate must be positive");
  const double sr = std::sqrt(rate);
  const double half_width = (gh.max_node() + 2.0) / sr;
  const double lo = center - half_width;
  const double hi = center + half_width;

  std::vector<double> inside;
  for (double b : breaks) {
    if (b > lo && b < hi) inside.push_back(b);
  }

  LineRule out;
  if (inside.empty()) {
    out.nodes.reserve(gh.order);
    out.weights.reserve(gh.order);
    for (int i = 0; i < gh.order; ++i) {
      out.nodes.push_back(center + gh.nodes[i] / sr);
      out.weights.push_back(gh.modified_weights[i] / sr);
    }
    return out;
  }

  constexpr int kPanelPoints = 24;
  constexpr int kGradedPoints = 12;
  constexpr int kGradingLevels = 16;
  constexpr double kGradingRatio = 0.15;
  const double omega = 2.0 * std::sqrt(gh.order * rate) + 1.0;
  const double h = std::min(1.0 / sr, kPanelPoints / omega);
  const int panels = static_cast<int>(std::ceil((hi - lo) / h));

  std::vector<double> edges;
  edges.reserve(panels + 1 + inside.size() * (2 * kGradingLevels + 1));
  for (int k = 0; k <= panels; ++k) edges.push_back(lo + (hi - lo) * k / panels);
  for (double b : inside) {
    edges.push_back(b);
    double d = h;
    for (int level = 0; level < kGradingLevels; ++level) {
      d *= kGradingRatio;
      if (b - d > lo) edges.push_back(b - d);
      if (b + d < hi) edges.push_back(b + d);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::abs(a - b) <= 1e-15 * std::max(1.0, std::abs(a)); }),
              edges.end());

  const QuadratureRule fine = gauss_legendre(kPanelPoints);
  const QuadratureRule coarse = gauss_legendre(kGradedPoints);
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e];
    const double b = edges[e + 1];
    const QuadratureRule& gl = (b - a) < 0.5 * h ? coarse : fine;
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    for (int i = 0; i < gl.order; ++i) {
      out.nodes.push_back(mid + rad * gl.nodes[i]);
      out.weights.push_back(rad * gl.weights[i]);
    }
  }
  return out;
}

cplx integrate_weighted_Rn(const RealPointFn& f, const QuadratureRule& rule, int n, double b) {
  if (n < 1) throw ParameterError("integrate_weighted_Rn: dimension must be positive");
  if (!(b > 0.0)) throw ParameterError("integrate_weighted_Rn: gauss exponent must be positive");
  const double sb = std::sqrt(b);
  const std::size_t total = ipow(rule.order, n);
  std::vector<int> idx(n, 0);
  std::vector<double> x(n);
  cplx sum = 0.0;
  for (std::size_t count = 0; count < total; ++count, odometer_step(idx, rule.order)) {
    double w = 1.0;
    for (int d = 0; d < n; ++d) {
      x[d] = rule.nodes[idx[d]] / sb;
      w *= rule.weights[idx[d]] / sb;
    }
    if (w == 0.0) continue;
    const cplx v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationError("integrate_weighted_Rn: non-finite integrand value", x);
    }
    sum += w * v;
  }
  return sum;
}

namespace {

cplx integrate_complex_tensor(const ComplexPointFn& g, const QuadratureRule& rule, int n,
                              double rate_re, double rate_im, bool modified, double prefactor) {
  if (n < 1) throw ParameterError("complex-space quadrature: dimension must be positive");
  const double sre = std::sqrt(rate_re);
  const double sim = std::sqrt(rate_im);
  const auto& w = modified ? rule.modified_weights : rule.weights;
  const std::size_t total = ipow(rule.order, 2 * n);
  std::vector<int> idx(2 * n, 0);
  std::vector<cplx> z(n);
  cplx sum = 0.0;
  for (std::size_t count = 0; count < total; ++count, odometer_step(idx, rule.order)) {
    double weight = prefactor;
    for (int d = 0; d < n; ++d) {
      const int iu = idx[2 * d];
      const int iv = idx[2 * d + 1];
      z[d] = cplx(rule.nodes[iu] / sre, rule.nodes[iv] / sim);
      weight *= w[iu] * w[iv] / (sre * sim);
    }
    if (weight == 0.0) continue;
    const cplx v = g(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::vector<double> where;
      for (const cplx& c : z) {
        where.push_back(c.real());
        where.push_back(c.imag());
      }
      throw EvaluationError("complex-space quadrature: non-finite integrand value", where);
    }
    sum += weight * v;
  }
  return sum;
}

}  // namespace

cplx integrate_fock_measure(const ComplexPointFn& F, const QuadratureRule& rule, int n) {
  return integrate_complex_tensor(F, rule, n, 1.0, 1.0, false, std::pow(std::numbers::pi, -n));
}

cplx integrate_envelope_Cn(const ComplexPointFn& g, const QuadratureRule& rule, int n,
                           double rate_re, double rate_im) {
  if (!(rate_re > 0.0) || !(rate_im > 0.0)) {
    throw ParameterError("integrate_envelope_Cn: envelope rates must be positive");
  }
  return integrate_complex_tensor(g, rule, n, rate_re, rate_im, true, 1.0);
}

}  // namespace fock

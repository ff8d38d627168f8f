#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

/// Gauss-Hermite rule for the weight e^{-t^2} on the real line.
///
/// `weights` underflow to zero for nodes beyond |t| ~ 27 (orders above a few
/// hundred); `modified_weights` = weights * e^{t^2} are always finite and are
/// what integrals of functions carrying their own Gaussian decay use.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;             // strictly increasing, symmetric
  std::vector<double> weights;           // for e^{-t^2}
  std::vector<double> modified_weights;  // weights * e^{t^2}
  double scale = 1.0;

  double max_node() const { return nodes.empty() ? 0.0 : nodes.back(); }
};

QuadratureRule gauss_hermite(int order);

/// Gauss-Legendre rule on [-1, 1] (modified_weights == weights).
QuadratureRule gauss_legendre(int order);

/// Nodes and weights approximating the plain integral  ∫_R f(x) dx  for
/// integrands that carry a Gaussian envelope e^{-rate (x - center)^2}.
struct LineRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// Scaled Gauss-Hermite when no breakpoint lies inside the envelope support;
/// otherwise composite Gauss-Legendre panels split at the breakpoints and
/// graded geometrically toward them. The Hermite order fixes the polynomial
/// degree (2*order - 1) the rule must resolve.
LineRule gaussian_line_rule(const QuadratureRule& gh, double rate, double center = 0.0,
                            std::span<const double> breaks = {});

using RealPointFn = std::function<cplx(std::span<const double>)>;
using ComplexPointFn = std::function<cplx(std::span<const cplx>)>;

/// ∫_{R^n} f(x) e^{-b|x|^2} dx by the tensor rule, nodes visited in
/// lexicographic order.
cplx integrate_weighted_Rn(const RealPointFn& f, const QuadratureRule& rule, int n, double b);

/// ∫_{C^n} F dλ with dλ = π^{-n} e^{-|z|^2} dz.
cplx integrate_fock_measure(const ComplexPointFn& F, const QuadratureRule& rule, int n);

/// ∫_{C^n} g(z) dz (Lebesgue) for g decaying like
/// exp(-rate_re Σ Re(z_j)^2 - rate_im Σ Im(z_j)^2). g must include that decay.
cplx integrate_envelope_Cn(const ComplexPointFn& g, const QuadratureRule& rule, int n,
                           double rate_re, double rate_im);

}  // namespace fock

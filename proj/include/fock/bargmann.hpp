#pragma once

#include <span>
#include <vector>

#include "fock/hermite.hpp"
#include "fock/quadrature.hpp"

namespace fock {

/// Bf(z) = (2/pi)^{n/4} ∫ f(x) e^{2x·z - x^2 - z^2/2} dx, sampled at the real
/// Gauss-Hermite nodes for the weight e^{-x^2}.
cplx bargmann_point(const RealPointFn& f, int n, std::span<const cplx> z, const QuadratureRule& rule);
cplx bargmann_point(const HermiteVector& f, std::span<const cplx> z, const QuadratureRule& rule);

/// B maps psi_alpha to e_alpha, so in coefficients both directions are the identity.
FockVector bargmann_basis(const HermiteVector& f);
HermiteVector inverse_bargmann_basis(const FockVector& F);

/// B^{-1}F(x) = (2/pi)^{n/4} ∫ F(z) e^{2x·z̄ - x^2 - z̄^2/2} dλ(z).
cplx inverse_bargmann_point(const FockVector& F, std::span<const double> x, const QuadratureRule& rule);

/// Fourier transform in the Hermite basis: c_alpha -> (-i)^{|alpha|} c_alpha.
HermiteVector fourier_diagonal(const HermiteVector& f);
HermiteVector inverse_fourier_diagonal(const HermiteVector& f);

/// (-i)^k as an exact complex unit.
cplx minus_i_power(int k);
cplx i_power(int k);

/// <psi_k, F psi_k> for k = 0..kmax, with F f(x) = pi^{-1/2} ∫ e^{-2ixy} f(y) dy
/// evaluated as a double quadrature on the line.
std::vector<cplx> fourier_eigenvalues_by_quadrature(int kmax, const QuadratureRule& rule);

}  // namespace fock

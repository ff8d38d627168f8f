#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "fock/hermite.hpp"
#include "fock/multiplier.hpp"
#include "fock/quadrature.hpp"

namespace fock {

using SymbolRule = std::function<cplx(std::span<const cplx>)>;

/// An entire symbol phi, given by coefficients, by a pointwise rule, or both.
///
/// `growth` is a rate kappa with |phi(zeta)| <~ e^{kappa (Re zeta)^2} and at
/// most polynomial growth along the imaginary directions. Integrals built on
/// phi use it to pick their Gaussian envelope. Symbols synthesized from a
/// bounded multiplier always satisfy kappa = 1/2.
struct Symbol {
  int n = 1;
  std::optional<FockVector> coeffs;
  SymbolRule rule;
  std::string provenance = "external";  // from_multiplier | closed_form | external
  double growth = 0.5;

  /// Uses the pointwise rule when present, else the coefficients.
  cplx operator()(std::span<const cplx> z) const;
  cplx at(cplx z) const {
    const cplx p[1] = {z};
    return (*this)(p);
  }
};

Symbol symbol_from_coeffs(FockVector coeffs, std::string provenance = "external");

/// Pointwise symbol of m, evaluated by quadrature on demand.
Symbol symbol_from_multiplier(const Multiplier& m, const QuadratureRule& rule);

/// phi(z) = (2/pi)^{n/2} e^{z^2/2} ∫ m(x) e^{-2x^2} e^{2ix·z} dx.
cplx symbol_point(const Multiplier& m, std::span<const cplx> z, const QuadratureRule& rule);

/// c_alpha = i^{|alpha|} ∫ m psi_0 psi_alpha dx.
FockVector symbol_coeffs(const Multiplier& m, const TruncationBasis& basis, const QuadratureRule& rule);

/// m(x) = psi_0(x)^{-1} Σ (-i)^{|alpha|} c_alpha psi_alpha(x).
cplx multiplier_from_symbol_coeffs(const FockVector& phi, std::span<const double> x);

/// The double Fock-measure integral
///   m(x) = ∫∫ phi(z - w̄) e^{z w̄ - 2ix z̄ + z̄^2/2} dλ(w) dλ(z)
/// on C x C, as a 4-dimensional tensor rule adapted to its Gaussian envelope.
/// One dimension only; needs phi.growth < 1/2 and rule.order <= 40.
cplx multiplier_from_symbol_integral(const Symbol& phi, double x, const QuadratureRule& rule);

/// Multiplier of the adjoint operator: conj(m).
Multiplier adjoint_symbol(const Multiplier& m);

}  // namespace fock

#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: plain series in long double and composite Simpson sums.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using lcplx = std::complex<long double>;

// Physicists' Hermite polynomial by the explicit sum
//   H_k(t) = k! Σ_m (-1)^m (2t)^{k-2m} / (m! (k-2m)!).
inline long double hermite_poly(int k, long double t) {
  long double sum = 0.0L;
  for (int m = 0; 2 * m <= k; ++m) {
    long double term = std::tgamma(static_cast<long double>(k + 1)) /
                       (std::tgamma(static_cast<long double>(m + 1)) * std::tgamma(static_cast<long double>(k - 2 * m + 1)));
    term *= std::pow(2.0L * t, k - 2 * m);
    sum += (m % 2 ? -term : term);
  }
  return sum;
}

// psi_k(x) = (2/pi)^{1/4} (2^k k!)^{-1/2} H_k(sqrt2 x) e^{-x^2}.
inline double psi(int k, double x) {
  const long double pi = 3.14159265358979323846264338327950288L;
  const long double norm = std::pow(2.0L / pi, 0.25L) / std::sqrt(std::pow(2.0L, k) * std::tgamma(k + 1.0L));
  return static_cast<double>(norm * hermite_poly(k, std::sqrt(2.0L) * x) * std::exp(-static_cast<long double>(x) * x));
}

// erfi(z) = (2/sqrt(pi)) Σ z^{2k+1} / (k! (2k+1)).
inline std::complex<double> erfi(std::complex<double> zd) {
  const lcplx z(zd.real(), zd.imag());
  const long double pi = 3.14159265358979323846264338327950288L;
  lcplx term = z;  // z^{2k+1}/k!
  lcplx sum = z;
  for (int k = 1; k < 400; ++k) {
    term *= z * z / static_cast<long double>(k);
    const lcplx add = term / static_cast<long double>(2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-22L * std::abs(sum)) break;
  }
  const lcplx out = sum * (2.0L / std::sqrt(pi));
  return {static_cast<double>(out.real()), static_cast<double>(out.imag())};
}

// Composite Simpson on [a, b] with an even number of panels. The endpoints
// are sampled a hair inside so one-sided limits are used at a jump.
inline std::complex<double> simpson(const std::function<std::complex<double>(double)>& f, double a, double b,
                                    int panels) {
  const double h = (b - a) / panels;
  const double inset = 1e-9 * h;
  std::complex<double> s = f(a + inset) + f(b - inset);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// phi(z) = (2/pi)^{1/2} e^{z^2/2} ∫ m(x) e^{-2x^2} e^{2ixz} dx, straight from
// the definition. Splitting at 0 keeps the jump of odd multipliers on a panel edge.
inline std::complex<double> symbol(const std::function<std::complex<double>(double)>& m, std::complex<double> z,
                                   int panels = 40000, double half_width = 12.0) {
  const std::complex<double> I(0.0, 1.0);
  auto f = [&](double x) { return m(x) * std::exp(-2.0 * x * x + 2.0 * I * x * z); };
  const std::complex<double> integral = simpson(f, -half_width, 0.0, panels) + simpson(f, 0.0, half_width, panels);
  return std::sqrt(2.0 / 3.14159265358979323846) * std::exp(z * z / 2.0) * integral;
}

}  // namespace oracle

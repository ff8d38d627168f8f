#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fock/quadrature.hpp"

using namespace fock;

TEST_SUITE("quad") {

TEST_CASE("five-point rule matches the classical table") {
  const QuadratureRule r = gauss_hermite(5);
  const double nodes[5] = {-2.020182870456086, -0.958572464613819, 0.0, 0.958572464613819, 2.020182870456086};
  const double weights[5] = {0.019953242059046, 0.393619323152241, 0.945308720482942, 0.393619323152241,
                             0.019953242059046};
  for (int i = 0; i < 5; ++i) {
    CHECK(r.nodes[i] == doctest::Approx(nodes[i]).epsilon(1e-13));
    CHECK(r.weights[i] == doctest::Approx(weights[i]).epsilon(1e-12));
  }
}

TEST_CASE("nodes agree with a dense eigensolver on the Jacobi matrix") {
  const int n = 30;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const QuadratureRule r = gauss_hermite(n);
  for (int i = 0; i < n; ++i) {
    CHECK(r.nodes[i] == doctest::Approx(es.eigenvalues()[i]).epsilon(1e-12));
    // Golub-Welsch weight: sqrt(pi) times the squared first eigenvector entry.
    const double w = std::sqrt(std::numbers::pi) * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    CHECK(r.weights[i] == doctest::Approx(w).epsilon(1e-9));
  }
}

TEST_CASE("random polynomials of degree up to 2*order-1 integrate exactly") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> normal;
  for (int order : {3, 8, 17, 25}) {
    const QuadratureRule r = gauss_hermite(order);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> c(2 * order);
      for (double& v : c) v = normal(gen);
      double exact = 0.0;
      for (std::size_t k = 0; k < c.size(); k += 2) exact += c[k] * std::tgamma(0.5 * (k + 1));
      auto p = [&](std::span<const double> x) {
        double v = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) v = v * x[0] + c[k];
        return cplx(v);
      };
      CHECK(integrate_weighted_Rn(p, r, 1, 1.0).real() == doctest::Approx(exact).epsilon(1e-10));
    }
  }
}

TEST_CASE("large orders keep positive, finite modified weights") {
  const QuadratureRule r = gauss_hermite(1024);
  REQUIRE(r.nodes.size() == 1024u);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    CHECK(r.modified_weights[i] > 0.0);
    CHECK(std::isfinite(r.modified_weights[i]));
    CHECK(r.nodes[i] == doctest::Approx(-r.nodes[r.nodes.size() - 1 - i]).epsilon(1e-14));
    if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    sum += r.weights[i];
  }
  CHECK(sum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("order out of range is rejected") {
  CHECK_THROWS_AS(gauss_hermite(0), ParameterError);
  CHECK_THROWS_AS(gauss_hermite(5000), ParameterError);
}

TEST_CASE("Gauss-Legendre integrates even powers on [-1,1]") {
  const QuadratureRule r = gauss_legendre(10);
  for (int k = 0; k < 20; k += 2) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
    CHECK(s == doctest::Approx(2.0 / (k + 1)).epsilon(1e-14));
  }
}

TEST_CASE("line rule handles a kink at a breakpoint") {
  // ∫ |x| e^{-x^2} dx = 1; the kink at 0 spoils plain Gauss-Hermite.
  const QuadratureRule gh = gauss_hermite(60);
  const double br[1] = {0.0};
  const LineRule lr = gaussian_line_rule(gh, 1.0, 0.0, br);
  double s = 0.0;
  for (std::size_t i = 0; i < lr.size(); ++i) s += lr.weights[i] * std::abs(lr.nodes[i]) * std::exp(-lr.nodes[i] * lr.nodes[i]);
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

  // Without the breakpoint the same integrand is visibly worse.
  const LineRule plain = gaussian_line_rule(gh, 1.0);
  double p = 0.0;
  for (std::size_t i = 0; i < plain.size(); ++i) p += plain.weights[i] * std::abs(plain.nodes[i]) * std::exp(-plain.nodes[i] * plain.nodes[i]);
  CHECK(std::abs(p - 1.0) > 1e-6);
}

TEST_CASE("complex envelope and Fock measure normalisation") {
  const QuadratureRule r = gauss_hermite(30);
  // ∫_C e^{-2 Re^2 - Im^2/2} dz = sqrt(pi/2) sqrt(2 pi) = pi.
  auto g = [](std::span<const cplx> z) { return cplx(std::exp(-2.0 * z[0].real() * z[0].real() - 0.5 * z[0].imag() * z[0].imag())); };
  CHECK(integrate_envelope_Cn(g, r, 1, 2.0, 0.5).real() == doctest::Approx(std::numbers::pi).epsilon(1e-13));
  auto one = [](std::span<const cplx>) { return cplx(1.0); };
  CHECK(integrate_fock_measure(one, r, 2).real() == doctest::Approx(1.0).epsilon(1e-12));
  // ∫ |z|^2 dλ = 1 in one variable.
  auto r2 = [](std::span<const cplx> z) { return cplx(std::norm(z[0])); };
  CHECK(integrate_fock_measure(r2, r, 1).real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("repeated integrals are bit-identical") {
  const QuadratureRule r = gauss_hermite(40);
  auto f = [](std::span<const double> x) { return cplx(std::sin(x[0]) * std::cos(2.0 * x[1]) + x[0] * x[1], x[1]); };
  const cplx a = integrate_weighted_Rn(f, r, 2, 0.5);
  const cplx b = integrate_weighted_Rn(f, r, 2, 0.5);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

}  // TEST_SUITE

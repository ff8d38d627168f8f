#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fock/gallery.hpp"
#include "fock/operator.hpp"
#include "oracles.hpp"

using namespace fock;

namespace {

FockVector random_low(const TruncationBasis& b, int d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  FockVector f(b);
  for (std::size_t i = 0; i < b.leading_size(d); ++i) f.coeffs[static_cast<Eigen::Index>(i)] = cplx(normal(gen), normal(gen));
  return f;
}

double largest_singular_value(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()[0];
}

}  // namespace

TEST_SUITE("operator") {

TEST_CASE("entries match a Simpson oracle with the i^(a-b) phase") {
  const TruncationBasis b(1, 6);
  const OperatorMatrix s = build_matrix(named_multiplier("tanh"), b, gauss_hermite(100));
  const cplx I(0.0, 1.0);
  for (int a = 0; a <= 6; ++a) {
    for (int c = 0; c <= 6; ++c) {
      const cplx integral = oracle::simpson(
          [&](double x) { return cplx(std::tanh(x) * oracle::psi(a, x) * oracle::psi(c, x)); }, -12.0, 12.0, 24000);
      const cplx want = std::pow(I, a - c) * integral;
      CHECK(std::abs(s.entries(a, c) - want) < 1e-11);
    }
  }
}

TEST_CASE("identity, order requirement and provenance") {
  const TruncationBasis b(2, 5);
  const OperatorMatrix id = build_matrix(named_multiplier("constant", [] { NamedParams p; p.n = 2; return p; }()), b, gauss_hermite(20));
  CHECK((id.entries - Eigen::MatrixXcd::Identity(21, 21)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(id.order == 20);
  CHECK(id.source_hash != 0u);
  CHECK_THROWS_AS(build_matrix(named_multiplier("sin"), TruncationBasis(1, 20), gauss_hermite(41)), ParameterError);
  CHECK(default_matrix_order(10) == 200);
  CHECK(default_matrix_order(80) == 320);
}

TEST_CASE("matrix path agrees with the direct integral") {
  std::mt19937_64 gen(17);
  const TruncationBasis b(1, 32);
  const QuadratureRule rule = gauss_hermite(default_matrix_order(32));
  const QuadratureRule direct = gauss_hermite(80);
  for (const NamedOperator& op : {identity_pair(), hilbert_pair(), gaussian_pair(0.25), sin_pair()}) {
    const OperatorMatrix s = build_matrix(op.multiplier, b, rule);
    const FockVector f = random_low(b, 16, gen);
    for (cplx z : {cplx(0.3, -0.2), cplx(-0.8, 0.5)}) {
      const cplx zz[1] = {z};
      CHECK(std::abs(fock_eval(apply(s, f), zz) - apply_direct_quadrature(op.symbol(), f, z, direct)) < 1e-8);
    }
  }
}

TEST_CASE("operator norm agrees with a library SVD") {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd a(25, 25);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cplx(normal(gen), normal(gen));
  CHECK(operator_norm(a) == doctest::Approx(largest_singular_value(a)).epsilon(1e-8));

  const OperatorMatrix s = build_matrix(named_multiplier("tanh"), TruncationBasis(1, 40), gauss_hermite(200));
  const NormEstimate e = operator_norm_estimate(s.entries);
  CHECK(e.value <= largest_singular_value(s.entries) * (1.0 + 1e-12));
  // The top of the spectrum is a tight cluster, so the relative-change stop
  // fires early. The estimate stays a lower bound within a few 1e-5.
  CHECK(e.value == doctest::Approx(largest_singular_value(s.entries)).epsilon(1e-4));
  CHECK(e.value <= 1.0);
}

TEST_CASE("adjoint equals the matrix of the conjugate multiplier") {
  const TruncationBasis b(1, 24);
  const QuadratureRule r = gauss_hermite(200);
  NamedParams p;
  p.a = 0.4;
  for (const Multiplier& m : {named_multiplier("hilbert"), named_multiplier("modulation", p)}) {
    const OperatorMatrix s = build_matrix(m, b, r);
    const OperatorMatrix sc = build_matrix(conj_multiplier(m), b, r);
    CHECK((adjoint(s).entries - sc.entries).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("composition of smooth multipliers on the leading block") {
  const TruncationBasis b(1, 64);
  const QuadratureRule r = gauss_hermite(256);
  const OperatorMatrix s = build_matrix(named_multiplier("sin"), b, r);
  const OperatorMatrix c = build_matrix(named_multiplier("cos"), b, r);
  const OperatorMatrix sc = build_matrix(product_multiplier({named_multiplier("sin"), named_multiplier("cos")}), b, r);
  const Eigen::MatrixXcd diff = leading_block(compose(s, c), 32).entries - leading_block(sc, 32).entries;
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-6);
  CHECK(leading_block(s, 32).basis.max_degree() == 32);
}

TEST_CASE("H^2 e0 + e0 shrinks as N grows") {
  // -sgn^2 = -1, so S_H^2 -> -Id. Truncation leaves a residual that decays slowly.
  std::vector<double> res;
  for (int N : {16, 32, 64, 128}) {
    const TruncationBasis b(1, N);
    const OperatorMatrix h = build_matrix(named_multiplier("hilbert"), b, gauss_hermite(default_matrix_order(N)));
    FockVector e0(b);
    e0.coeffs[0] = 1.0;
    FockVector hh = apply(h, apply(h, e0));
    res.push_back((hh.coeffs + e0.coeffs).norm());
  }
  for (std::size_t i = 1; i < res.size(); ++i) CHECK(res[i] < res[i - 1]);
}

TEST_CASE("normality and Weyl covariance") {
  const TruncationBasis b(1, 64);
  const QuadratureRule r = gauss_hermite(256);
  const OperatorMatrix h = build_matrix(named_multiplier("tanh"), b, r);
  CHECK(commutator_norm(h, adjoint(h), 32) < 1e-6);

  std::mt19937_64 gen(23);
  const FockVector f = random_low(b, 20, gen);
  const double a[1] = {0.7};
  const FockVector lhs = apply(h, f);
  const FockVector rhs = apply(h, weyl_coeffs(f, a));
  const cplx z[1] = {cplx(0.3, 0.6)};
  CHECK(std::abs(weyl_apply(lhs, a, z) - fock_eval(rhs, z)) < 1e-4);
}

TEST_CASE("mismatched bases are rejected") {
  const OperatorMatrix a = build_matrix(named_multiplier("sin"), TruncationBasis(1, 4), gauss_hermite(20));
  const OperatorMatrix c = build_matrix(named_multiplier("sin"), TruncationBasis(1, 5), gauss_hermite(20));
  CHECK_THROWS_AS(compose(a, c), ParameterError);
  CHECK_THROWS_AS(apply(a, FockVector(TruncationBasis(1, 5))), ParameterError);
}

}  // TEST_SUITE

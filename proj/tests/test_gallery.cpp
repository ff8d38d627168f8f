#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fock/gallery.hpp"
#include "fock/operator.hpp"
#include "oracles.hpp"

using namespace fock;

TEST_SUITE("gallery") {

TEST_CASE("A(z) against an erfi series") {
  // A(z) = (sqrt(pi)/2) erfi(z).
  for (cplx z : {cplx(0.0, 0.0), cplx(0.5, 0.2), cplx(-1.3, 2.0), cplx(3.0, -1.0)}) {
    const cplx want = std::sqrt(std::numbers::pi) / 2.0 * oracle::erfi(z);
    CHECK(std::abs(antiderivative_A(z) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
  // Far out the series cancels badly even in long double, so these two come
  // from a 40-digit evaluation.
  const cplx far1 = antiderivative_A(cplx(4.0, 0.5));
  CHECK(std::abs(far1 - cplx(-663531.8152203484047, -587862.5878461566407)) <= 1e-12 * std::abs(far1));
  const cplx far2 = antiderivative_A(cplx(-2.0, 5.0));
  CHECK(std::abs(far2 - cplx(-6.944315080597090e-11, 0.8862269254492105044)) <= 1e-13);
  CHECK_THROWS_AS(antiderivative_A(cplx(19.0, 0.0)), DomainError);
}

TEST_CASE("Hilbert symbol values") {
  CHECK(hilbert_symbol(0.0) == cplx(0.0));
  const cplx z(0.7, 0.3);
  CHECK(std::abs(hilbert_symbol(z) - oracle::erfi(z / std::sqrt(2.0))) < 1e-13);
  const double h = 1e-5;
  const double deriv = std::abs((hilbert_symbol(h) - hilbert_symbol(-h)) / (2.0 * h));
  CHECK(deriv == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-8));
}

TEST_CASE("closed forms agree with synthesis") {
  const QuadratureRule r = gauss_hermite(200);
  for (const NamedOperator& op : {identity_pair(), hilbert_pair(), sin_pair(), cos_pair(), gaussian_pair(0.1),
                                  gaussian_pair(0.4), modulation_pair(0.5), modulation_pair(0.5, 1.0)}) {
    CAPTURE(op.name);
    CHECK(closed_form_error(op, r, 20, 2.0, 99) < 1e-7);
  }
  CHECK_THROWS_AS(gaussian_pair(0.0), ParameterError);
  CHECK_THROWS_AS(gaussian_pair(0.5), ParameterError);
}

TEST_CASE("modulation with c0 = 1 is the Weyl operator") {
  // S e0 (0) = W_a e0 (0) = e^{-a^2/2}; a = 1/2 gives e^{-1/8}.
  const NamedOperator op = modulation_pair(0.5, 1.0);
  const TruncationBasis b(1, 40);
  const OperatorMatrix s = build_matrix(op.multiplier, b, gauss_hermite(200));
  FockVector e0(b);
  e0.coeffs[0] = 1.0;
  const cplx zero[1] = {0.0};
  CHECK(std::abs(fock_eval(apply(s, e0), zero) - std::exp(-0.125)) < 1e-10);
}

TEST_CASE("gallery reports for the one-dimensional pairs pass") {
  for (const NamedOperator& op :
       {identity_pair(), hilbert_pair(), sin_pair(), cos_pair(), gaussian_pair(0.25), modulation_pair(0.5)}) {
    const Report r = gallery_report(op, 32, 0, 5);
    CAPTURE(op.name);
    CHECK(r.all_passed());
    CHECK(r.N == 32);
    CHECK(r.order == 200);
  }
}

TEST_CASE("Riesz suite reports its three identities") {
  const Report r = riesz_suite(2, 8);
  REQUIRE(r.checks.size() == 3u);
  for (const Check& c : r.checks) {
    CHECK(std::isfinite(c.value));
    CHECK_FALSE(c.hard);
  }
  // Σ ||phi_j||^2 approaches 1 from below as N grows.
  CHECK(r.checks[1].value < 1.0);
  CHECK(riesz_suite(2, 16).checks[1].value > r.checks[1].value);
  CHECK_THROWS_AS(riesz_suite(1, 8), ParameterError);
}

TEST_CASE("Beurling defect improves under refinement") {
  const int refine[2] = {14, 18};
  const Report r = beurling_suite(1, 10, refine);
  CHECK(r.passed());
  // With the block held at degree d the defect is (2 floor(d/2) + 2)/(N + 2),
  // so 6/12 at N = 10 and 6/20 at N = 18 for d = 5.
  CHECK(r.checks[0].value == doctest::Approx(6.0 / 12.0).epsilon(1e-9));
  CHECK(r.checks[2].value == doctest::Approx(6.0 / 20.0).epsilon(1e-9));
  const Report two = beurling_suite(2, 10);
  CHECK(two.checks.back().value < 1e-10);
  CHECK_THROWS_AS(beurling_suite(5, 10), ParameterError);
}

TEST_CASE("counterexample: bounded on the imaginary axis, unbounded operator") {
  const int Ns[3] = {16, 64, 256};
  const Report r = counterexample_suite(Ns);
  CHECK(r.all_passed());
}

}  // TEST_SUITE

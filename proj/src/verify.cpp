#include "fock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fock/bargmann.hpp"
#include "fock/operator.hpp"
#include "fock/quadrature.hpp"
#include "fock/spectral.hpp"
#include "fock/symbol.hpp"

namespace fock {
namespace {

using Eigen::MatrixXcd;

double max_abs(const MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

int pick(int configured, int fallback) { return configured > 0 ? configured : fallback; }

int matrix_order(const VerifyConfig& c, int N) { return pick(c.order, default_matrix_order(N)); }

FockVector random_vector(const TruncationBasis& basis, int d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  FockVector f(basis);
  const std::size_t k = basis.leading_size(d);
  for (std::size_t i = 0; i < k; ++i) f.coeffs[static_cast<Eigen::Index>(i)] = cplx(normal(gen), normal(gen));
  f.coeffs /= f.coeffs.norm();
  return f;
}

cplx random_point(std::mt19937_64& gen, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::polar(radius * std::sqrt(unit(gen)), 2.0 * std::numbers::pi * unit(gen));
}

MatrixXcd block(const OperatorMatrix& s, int d) { return leading_block(s, d).entries; }

Multiplier halfline() { return named_multiplier("halfline"); }

// ∫ t^k e^{-t^2} dt over R.
double gaussian_moment(int k) { return k % 2 == 1 ? 0.0 : std::tgamma(0.5 * (k + 1)); }

Report quad_suite(const VerifyConfig& c) {
  Report rep;
  rep.name = "quad";
  const int order = 20;
  rep.order = order;
  const QuadratureRule rule = gauss_hermite(order);
  std::mt19937_64 gen(c.seed);
  std::normal_distribution<double> normal;

  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> coef(2 * order);
    for (double& a : coef) a = normal(gen);
    double exact = 0.0;
    for (std::size_t k = 0; k < coef.size(); ++k) exact += coef[k] * gaussian_moment(static_cast<int>(k));
    auto poly = [&](std::span<const double> x) {
      double v = 0.0;
      for (std::size_t k = coef.size(); k-- > 0;) v = v * x[0] + coef[k];
      return cplx(v);
    };
    const double got = integrate_weighted_Rn(poly, rule, 1, 1.0).real();
    worst = std::max(worst, std::abs(got - exact) / std::abs(exact));
  }
  rep.add(check_at_most("polynomial_exactness_rel", worst, 1e-10));

  // Two axes: ∫∫ x^4 y^6 e^{-|x|^2}.
  auto mono = [](std::span<const double> x) { return cplx(std::pow(x[0], 4) * std::pow(x[1], 6)); };
  const double m2 = integrate_weighted_Rn(mono, rule, 2, 1.0).real();
  const double e2 = gaussian_moment(4) * gaussian_moment(6);
  rep.add(check_at_most("tensor_moment_rel", std::abs(m2 - e2) / e2, 1e-12));

  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  rep.add(check_close("weight_sum", wsum, std::sqrt(std::numbers::pi), 1e-13));

  auto wiggle = [](std::span<const double> x) { return cplx(std::cos(3.0 * x[0]) + x[0] * x[0]); };
  const cplx first = integrate_weighted_Rn(wiggle, rule, 1, 0.7);
  const cplx second = integrate_weighted_Rn(wiggle, rule, 1, 0.7);
  rep.add(check_true("deterministic_sum", first == second));

  const QuadratureRule gl = gauss_legendre(12);
  double gl_sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) gl_sum += gl.weights[i] * std::pow(gl.nodes[i], 22);
  rep.add(check_close("legendre_exactness", gl_sum, 2.0 / 23.0, 1e-14));
  return rep;
}

Report hermite_suite(const VerifyConfig& c) {
  Report rep;
  rep.name = "hermite";
  rep.N = 6;
  const QuadratureRule rule = gauss_hermite(24);
  rep.order = rule.order;

  for (int n : {1, 2}) {
    const TruncationBasis basis(n, 6);
    const std::size_t K = basis.size();
    double worst = 0.0;
    for (std::size_t a = 0; a < K; ++a) {
      for (std::size_t b = a; b < K; ++b) {
        auto f = [&](std::span<const double> x) {
          double r2 = 0.0;
          for (double v : x) r2 += v * v;
          return cplx(psi_eval(basis[a], x) * psi_eval(basis[b], x) * std::exp(2.0 * r2));
        };
        const double g = integrate_weighted_Rn(f, rule, n, 2.0).real();
        worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
      }
    }
    rep.add(check_at_most("gram_identity_n" + std::to_string(n), worst, 1e-10));
  }

  std::mt19937_64 gen(c.seed ^ 0x4e11ULL);
  const TruncationBasis b12(1, 12);
  double worst_parseval = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const FockVector f = random_vector(b12, 12, gen);
    const double q =
        integrate_fock_measure([&](std::span<const cplx> z) { return cplx(std::norm(fock_eval(f, z))); }, rule, 1)
            .real();
    worst_parseval = std::max(worst_parseval, std::abs(q - f.coeffs.squaredNorm()) / f.coeffs.squaredNorm());
  }
  rep.add(check_at_most("parseval_rel", worst_parseval, 1e-6));

  bool bijective = true;
  for (int n = 1; n <= 3; ++n) {
    const TruncationBasis basis(n, 8);
    for (std::size_t k = 0; k < basis.size(); ++k) bijective = bijective && basis.index_of(basis[k]) == k;
  }
  rep.add(check_true("graded_lex_bijection", bijective));
  return rep;
}

Report bargmann_suite(const VerifyConfig& c) {
  Report rep;
  rep.name = "bargmann";
  rep.N = pick(c.N, 24);
  const QuadratureRule inner = gauss_hermite(pick(c.order, 200));
  const QuadratureRule outer = gauss_hermite(std::max(30, rep.N + 2));
  rep.order = inner.order;
  std::mt19937_64 gen(c.seed ^ 0xba26ULL);
  const TruncationBasis basis(1, rep.N);

  double coeff_defect = 0.0;
  double quad_defect = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const FockVector F = random_vector(basis, rep.N, gen);
    const HermiteVector f(basis, F.coeffs);
    coeff_defect = std::max(coeff_defect, std::abs(bargmann_basis(f).norm() - f.norm()));
    if (trial < 10) {
      auto dens = [&](std::span<const cplx> z) { return cplx(std::norm(bargmann_point(f, z, inner))); };
      const double q = std::sqrt(integrate_fock_measure(dens, outer, 1).real());
      quad_defect = std::max(quad_defect, std::abs(q - f.norm()) / f.norm());
    }
  }
  rep.add(check_at_most("unitarity_coefficients", coeff_defect, 0.0));
  rep.add(check_at_most("unitarity_quadrature_rel", quad_defect, 1e-6));

  const TruncationBasis b10(1, 10);
  const FockVector F = random_vector(b10, 10, gen);
  const FockVector rotated = bargmann_basis(fourier_diagonal(inverse_bargmann_basis(F)));
  const FockVector unrotated = bargmann_basis(inverse_fourier_diagonal(inverse_bargmann_basis(F)));
  double rot = 0.0;
  double inv = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cplx z[1] = {random_point(gen, 2.0)};
    const cplx mz[1] = {cplx(0.0, -1.0) * z[0]};
    const cplx pz[1] = {cplx(0.0, 1.0) * z[0]};
    rot = std::max(rot, std::abs(fock_eval(rotated, z) - fock_eval(F, mz)));
    inv = std::max(inv, std::abs(fock_eval(unrotated, z) - fock_eval(F, pz)));
  }
  rep.add(check_at_most("rotation_lemma", rot, 1e-10));
  rep.add(check_at_most("inverse_rotation", inv, 1e-10));

  const std::vector<cplx> eig = fourier_eigenvalues_by_quadrature(8, gauss_hermite(60));
  double eig_err = 0.0;
  for (int k = 0; k <= 8; ++k) eig_err = std::max(eig_err, std::abs(eig[static_cast<std::size_t>(k)] - minus_i_power(k)));
  rep.add(check_at_most("fourier_eigenvalues", eig_err, 1e-8));
  return rep;
}

Report multiplier_suite(const VerifyConfig& c) {
  Report rep;
  rep.name = "multiplier";
  NamedParams gp;
  gp.a = 0.25;
  const Multiplier s = named_multiplier("sin");
  const Multiplier g = named_multiplier("gaussian", gp);
  const Multiplier prod = product_multiplier({s, g});
  const double bound = s.declared_sup.value() * g.declared_sup.value();
  rep.add(check_at_most("product_declared_sup", prod.declared_sup.value_or(std::numeric_limits<double>::infinity()), bound));
  rep.add(check_at_most("product_sampled_sup", sup_norm(prod, c.grid).value, bound));

  const Multiplier h = named_multiplier("hilbert");
  const Multiplier hc = conj_multiplier(h);
  double conj_err = 0.0;
  for (double x : {-2.5, -0.3, 0.4, 1.7}) conj_err = std::max(conj_err, std::abs(hc.at(x) - std::conj(h.at(x))));
  rep.add(check_at_most("conjugation_pointwise", conj_err, 0.0));

  rep.add(check_close("sin_sup_norm", sup_norm(s, c.grid).value, 1.0, 1e-3));
  const std::vector<cplx> range = essential_range(halfline(), c.grid);
  rep.add(check_true("halfline_two_values", range.size() == 2, static_cast<double>(range.size())));

  bool rejected = false;
  try {
    NamedParams bad;
    bad.boxes = {Box{{1.0}, {1.0}}};
    named_multiplier("indicator", bad);
  } catch (const ParameterError&) {
    rejected = true;
  }
  rep.add(check_true("empty_box_rejected", rejected));

  const Multiplier grid = grid_multiplier({{-1.0, 0.0, 2.0}}, {cplx(1.0), cplx(0.0, 1.0), cplx(3.0)});
  rep.add(check_close("grid_interpolation_midpoint", std::abs(grid.at(1.0) - cplx(1.5, 0.5)), 0.0, 1e-15));
  return rep;
}

Report symbol_suite(const VerifyConfig& c) {
  Report rep;
  rep.name = "symbol";
  rep.N = pick(c.N, 64);
  rep.order = matrix_order(c, rep.N);
  const QuadratureRule rule = gauss_hermite(rep.order);
  const QuadratureRule point_rule = gauss_hermite(200);
  NamedParams gp;
  gp.a = 0.25;

  // Membership: ||c|| barely moves from N = 32 to N = 64 for smooth multipliers.
  for (const char* name : {"sin", "gaussian"}) {
    const Multiplier m = named_multiplier(name, gp);
    const double n32 = symbol_coeffs(m, TruncationBasis(1, 32), rule).norm();
    const double n64 = symbol_coeffs(m, TruncationBasis(1, 64), rule).norm();
    rep.add(check_at_most(std::string("membership_stable_") + name, std::abs(n64 - n32), 1e-6));
  }

  // Parity transfer.
  auto parity_leak = [&](const char* name, int vanishing_parity) {
    const FockVector phi = symbol_coeffs(named_multiplier(name, gp), TruncationBasis(1, 32), rule);
    double leak = 0.0;
    for (int k = vanishing_parity; k <= 32; k += 2) leak = std::max(leak, std::abs(phi.coeffs[k]));
    return leak;
  };
  rep.add(check_at_most("parity_odd_sin", parity_leak("sin", 0), 1e-14));
  rep.add(check_at_most("parity_even_cos", parity_leak("cos", 1), 1e-14));
  rep.add(check_at_most("parity_odd_hilbert", parity_leak("hilbert", 0), 1e-14));

  const NamedOperator hil = hilbert_pair();
  rep.add(check_at_most("hilbert_closed_form", closed_form_error(hil, point_rule, 20, 2.0, c.seed), 1e-7));
  const cplx zero[1] = {0.0};
  rep.add(check_close("hilbert_phi_zero", std::abs(symbol_point(hil.multiplier, zero, point_rule)), 0.0, 1e-15));

  // Roundtrip m -> c -> m for sin on |x| <= 3.
  const Multiplier s = named_multiplier("sin");
  const FockVector cs = symbol_coeffs(s, TruncationBasis(1, rep.N), rule);
  double roundtrip = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double x[1] = {-3.0 + 0.1 * i};
    roundtrip = std::max(roundtrip, std::abs(multiplier_from_symbol_coeffs(cs, x) - s(x)));
  }
  rep.add(check_at_most("sin_roundtrip", roundtrip, 1e-6));

  // Double-integral recovery agrees with the coefficient formula.
  const Symbol closed = sin_pair().symbol();
  const QuadratureRule r40 = gauss_hermite(40);
  double integral_gap = 0.0;
  for (double xv : {-0.8, 0.3, 1.1}) {
    const double x[1] = {xv};
    integral_gap = std::max(integral_gap, std::abs(multiplier_from_symbol_integral(closed, xv, r40) -
                                                   multiplier_from_symbol_coeffs(cs, x)));
  }
  rep.add(check_at_most("integral_vs_coefficient_recovery", integral_gap, 1e-3));

  // Counterexample: phi bounded on the imaginary axis while the coefficient
  // recovery at the singular point keeps growing with N.
  const Multiplier psi = named_multiplier("counterexample");
  double sup_axis = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const cplx z[1] = {cplx(0.0, -5.0 + 0.1 * i)};
    sup_axis = std::max(sup_axis, std::abs(symbol_point(psi, z, point_rule)));
  }
  rep.add(check_true("counterexample_axis_sup_finite", std::isfinite(sup_axis), sup_axis));
  std::vector<double> at_zero;
  for (int n_deg : {16, 64, 256}) {
    const FockVector cpsi = symbol_coeffs(psi, TruncationBasis(1, n_deg), gauss_hermite(default_matrix_order(n_deg)));
    const double x[1] = {0.0};
    at_zero.push_back(std::abs(multiplier_from_symbol_coeffs(cpsi, x)));
  }
  rep.add(check_true("counterexample_recovery_grows", at_zero[0] < at_zero[1] && at_zero[1] < at_zero[2], at_zero[2]));
  return rep;
}

Report operator_suite(const VerifyConfig& c) {
  Report rep;
  rep.name = "operator";
  rep.N = pick(c.N, 64);
  rep.order = matrix_order(c, rep.N);
  const QuadratureRule rule = gauss_hermite(rep.order);
  const TruncationBasis basis(1, rep.N);
  std::mt19937_64 gen(c.seed ^ 0x0b5ULL);

  const OperatorMatrix id = build_matrix(named_multiplier("identity"), basis, rule);
  rep.add(check_at_most("identity_matrix", max_abs(id.entries - MatrixXcd::Identity(id.entries.rows(), id.entries.cols())), 1e-12));

  // Contraction.
  double contraction = 0.0;
  for (const char* name : {"sin", "hilbert", "gaussian", "halfline", "tanh"}) {
    const Multiplier m = named_multiplier(name);
    const OperatorMatrix s = build_matrix(m, basis, rule);
    const double sup = m.declared_sup.value_or(sup_norm(m, c.grid).value);
    for (int t = 0; t < 5; ++t) {
      const FockVector f = random_vector(basis, rep.N, gen);
      contraction = std::max(contraction, apply(s, f).norm() / (sup * f.norm()));
    }
  }
  rep.add(check_at_most("contraction", contraction, 1.0 + 1e-8));

  // Matrix path against the direct integral, N = 32, inputs of degree <= 16.
  {
    const TruncationBasis b32(1, 32);
    const QuadratureRule r32 = gauss_hermite(default_matrix_order(32));
    const QuadratureRule direct = gauss_hermite(80);
    double gap = 0.0;
    for (const NamedOperator& op : {identity_pair(), hilbert_pair(), gaussian_pair(0.25)}) {
      const OperatorMatrix s = build_matrix(op.multiplier, b32, r32);
      const Symbol phi = op.symbol();
      for (int t = 0; t < 10; ++t) {
        const FockVector f = random_vector(b32, 16, gen);
        const cplx z[1] = {random_point(gen, 1.0)};
        gap = std::max(gap, std::abs(fock_eval(apply(s, f), z) - apply_direct_quadrature(phi, f, z[0], direct)));
      }
    }
    rep.add(check_at_most("oracle_equivalence", gap, 1e-5));
  }

  // Adjoint and normality.
  const Multiplier hil = named_multiplier("hilbert");
  const OperatorMatrix sh = build_matrix(hil, basis, rule);
  const OperatorMatrix shc = build_matrix(conj_multiplier(hil), basis, rule);
  rep.add(check_at_most("adjoint_is_conjugate_symbol", max_abs(adjoint(sh).entries - shc.entries), 1e-12));
  rep.add(check_at_most("hilbert_normal_block", commutator_norm(sh, adjoint(sh), rep.N / 2), 1e-6));

  // Weyl covariance.
  {
    const Multiplier s = named_multiplier("sin");
    const OperatorMatrix ss = build_matrix(s, basis, rule);
    double gap = 0.0;
    for (double av : {0.5, -1.0}) {
      const double a[1] = {av};
      const FockVector f = random_vector(basis, rep.N / 2, gen);
      const FockVector lhs = apply(ss, f);
      const FockVector rhs = apply(ss, weyl_coeffs(f, a));
      for (int t = 0; t < 5; ++t) {
        const cplx z[1] = {random_point(gen, 1.0)};
        gap = std::max(gap, std::abs(weyl_apply(lhs, a, z) - fock_eval(rhs, z)));
      }
    }
    rep.add(check_at_most("weyl_covariance", gap, 1e-4));
  }

  // Multiplicativity on the leading block.
  const OperatorMatrix s_sin = build_matrix(named_multiplier("sin"), basis, rule);
  const OperatorMatrix s_cos = build_matrix(named_multiplier("cos"), basis, rule);
  const OperatorMatrix s_sc =
      build_matrix(product_multiplier({named_multiplier("sin"), named_multiplier("cos")}), basis, rule);
  rep.add(check_at_most("compose_sin_cos", max_abs(block(compose(s_sin, s_cos), rep.N / 2) - block(s_sc, rep.N / 2)), 1e-6));
  const OperatorMatrix chi = build_matrix(halfline(), basis, rule);
  rep.add(check_at_most("compose_halfline_halfline", max_abs(block(compose(chi, chi), rep.N / 2) - block(chi, rep.N / 2)), 1e-6));
  return rep;
}

Report spectral_suite(const VerifyConfig& c) {
  Report rep;
  rep.name = "spectral";
  rep.N = pick(c.N, 64);
  rep.order = matrix_order(c, rep.N);
  const QuadratureRule rule = gauss_hermite(rep.order);
  const TruncationBasis basis(1, rep.N);
  std::mt19937_64 gen(c.seed ^ 0x5bec7ULL);

  {
    std::normal_distribution<double> normal;
    MatrixXcd a(40, 40);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cplx(normal(gen), normal(gen));
    const MatrixXcd h = (a + a.adjoint()) / 2.0;
    const HermitianEigen e = jacobi_eigh(h, true);
    const MatrixXcd residual = h * e.vectors - e.vectors * e.values.cast<cplx>().asDiagonal();
    rep.add(check_at_most("jacobi_residual", max_abs(residual), 1e-10));
    bool sorted = std::is_sorted(e.values.data(), e.values.data() + e.values.size());
    rep.add(check_true("jacobi_sorted", sorted));
  }

  SpectrumOptions opt;
  opt.grid = c.grid;

  // Real multipliers: eigenvalues inside [ess inf, ess sup].
  const SpectrumReport tanh_rep = spectrum_estimate(named_multiplier("tanh"), basis, rule, opt);
  double outside = 0.0;
  for (const cplx& l : tanh_rep.eigenvalues) outside = std::max({outside, std::abs(l.real()) - 1.0, std::abs(l.imag())});
  rep.add(check_at_most("tanh_inclusion", outside, 1e-10));
  rep.add(soft(check_at_most("tanh_hausdorff", tanh_rep.hausdorff, c.hausdorff_bound)));

  const SpectrumReport half = spectrum_estimate(halfline(), basis, rule, opt);
  double half_out = 0.0;
  for (const cplx& l : half.eigenvalues) half_out = std::max({half_out, -l.real(), l.real() - 1.0, std::abs(l.imag())});
  rep.add(check_at_most("halfline_inclusion", half_out, 1e-10));
  rep.add(soft(check_at_least("halfline_clustering", fraction_within(half.eigenvalues, half.reference, c.cluster_radius),
                              c.cluster_fraction)));
  const SpectrumReport ih = spectrum_estimate(scaled_multiplier(named_multiplier("hilbert"), cplx(0.0, 1.0)), basis, rule, opt);
  rep.add(soft(check_at_least("i_hilbert_clustering", fraction_within(ih.eigenvalues, ih.reference, c.cluster_radius),
                              c.cluster_fraction)));
  double worst_probe = 0.0;
  for (const auto* r : {&tanh_rep, &half, &ih}) {
    for (const ResolventProbe& p : r->probes) worst_probe = std::max(worst_probe, p.min_singular_value);
  }
  rep.add(soft(check_at_most("resolvent_probes", worst_probe, c.cluster_radius)));

  // Norms grow toward the sup and never pass it.
  {
    const Multiplier s = named_multiplier("sin");
    double prev = 0.0;
    bool monotone = true;
    double top = 0.0;
    for (int n_deg : {16, 32, 64, 96}) {
      const double v = operator_norm(build_matrix(s, TruncationBasis(1, n_deg), gauss_hermite(default_matrix_order(n_deg))));
      monotone = monotone && v >= prev;
      prev = v;
      top = std::max(top, v);
    }
    rep.add(check_true("sin_norm_monotone", monotone, prev));
    rep.add(check_at_most("sin_norm_below_sup", top, 1.0 + 1e-8));
    rep.add(soft(check_at_least("sin_norm_near_sup_N96", prev, 1.0 - 5e-3)));
  }

  // Reducing projections.
  const double inf = std::numeric_limits<double>::infinity();
  const OperatorMatrix p = reducing_projection({Box{{0.0}, {inf}}}, basis, rule);
  const OperatorMatrix sh = build_matrix(named_multiplier("hilbert"), basis, rule);
  const int d = rep.N / 2;
  rep.add(check_at_most("projection_selfadjoint", max_abs(block(p, d) - block(adjoint(p), d)), 1e-6));
  rep.add(check_at_most("projection_idempotent", max_abs(block(compose(p, p), d) - block(p, d)), 1e-6));
  rep.add(check_at_most("projection_commutes_hilbert",
                        max_abs(block(compose(p, sh), d) - block(compose(sh, p), d)), 1e-6));
  const OperatorMatrix p1 = reducing_projection({Box{{-inf}, {-0.5}}}, basis, rule);
  const OperatorMatrix p2 = reducing_projection({Box{{0.5}, {inf}}}, basis, rule);
  rep.add(check_at_most("disjoint_projections_product", max_abs(block(compose(p1, p2), d)), 1e-6));

  // Non-compactness: shrinking bumps keep a fixed share of their norm.
  const double anchor[1] = {0.25};
  const int Ns[1] = {rep.N};
  const CompactnessReport cr = compactness_probe(halfline(), Ns, 4, anchor);
  rep.add(soft(check_at_least("bump_ratio_stays_away_from_zero", cr.rows.back().ratio, 0.5)));
  return rep;
}

std::vector<Report> gallery_suite(const VerifyConfig& c) {
  std::vector<Report> out;
  const int N = pick(c.N, 64);
  for (const NamedOperator& op :
       {identity_pair(), hilbert_pair(), sin_pair(), cos_pair(), gaussian_pair(0.25), modulation_pair(0.5, 1.0)}) {
    out.push_back(gallery_report(op, N, c.order, c.seed));
  }
  out.push_back(riesz_suite(2, 24, c.order));
  const int refine[3] = {24, 32, 40};
  out.push_back(beurling_suite(1, 20, refine, c.order));
  out.push_back(beurling_suite(2, 20, {}, c.order));
  const int Ns[3] = {16, 64, 256};
  out.push_back(counterexample_suite(Ns, c.order));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"quad",     "hermite",  "bargmann", "multiplier",
                                                 "symbol",   "operator", "spectral", "gallery"};
  return names;
}

std::vector<Report> run_suite(const std::string& name, const VerifyConfig& config) {
  if (name == "quad") return {quad_suite(config)};
  if (name == "hermite") return {hermite_suite(config)};
  if (name == "bargmann") return {bargmann_suite(config)};
  if (name == "multiplier") return {multiplier_suite(config)};
  if (name == "symbol") return {symbol_suite(config)};
  if (name == "operator") return {operator_suite(config)};
  if (name == "spectral") return {spectral_suite(config)};
  if (name == "gallery") return gallery_suite(config);
  throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace fock

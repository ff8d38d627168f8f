// Acceptance run: one line per criterion, PASS or FAIL, with the measured
// numbers that decided it. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fock/bargmann.hpp"
#include "fock/gallery.hpp"
#include "fock/operator.hpp"
#include "fock/spectral.hpp"
#include "fock/symbol.hpp"

using namespace fock;
using Eigen::MatrixXcd;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string g(double v) { return fmt("%.3g", v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs(const MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

MatrixXcd block(const OperatorMatrix& s, int d) { return leading_block(s, d).entries; }

FockVector random_vector(const TruncationBasis& b, int d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  FockVector f(b);
  for (std::size_t i = 0; i < b.leading_size(d); ++i) f.coeffs[static_cast<Eigen::Index>(i)] = cplx(normal(gen), normal(gen));
  return f;
}

cplx random_point(std::mt19937_64& gen, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(gen)), 2.0 * std::numbers::pi * u(gen));
}

OperatorMatrix matrix(const Multiplier& m, int N) {
  return build_matrix(m, TruncationBasis(m.n, N), gauss_hermite(default_matrix_order(N)));
}

const double kInf = std::numeric_limits<double>::infinity();

Outcome bargmann_unitarity() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(101);
  const TruncationBasis b(1, 24);
  const QuadratureRule inner = gauss_hermite(200);
  const QuadratureRule outer = gauss_hermite(30);
  double coeff = 0.0, quad = 0.0;
  for (int t = 0; t < 100; ++t) {
    const HermiteVector f(b, random_vector(b, 24, gen).coeffs);
    coeff = std::max(coeff, std::abs(bargmann_basis(f).norm() - f.norm()));
    auto dens = [&](std::span<const cplx> z) { return cplx(std::norm(bargmann_point(f, z, inner))); };
    quad = std::max(quad, std::abs(std::sqrt(integrate_fock_measure(dens, outer, 1).real()) - f.norm()) / f.norm());
  }
  const double secs = seconds_since(t0);
  return {coeff == 0.0 && quad <= 1e-6 && secs < 10.0,
          "coeff defect " + g(coeff) + ", quadrature rel err " + g(quad) + " (<= 1e-6), " + fmt("%.2f", secs) + " s (< 10)"};
}

Outcome rotation_lemma() {
  std::mt19937_64 gen(202);
  const TruncationBasis b(1, 12);
  const FockVector F = random_vector(b, 12, gen);
  const FockVector R = bargmann_basis(fourier_diagonal(inverse_bargmann_basis(F)));
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cplx z[1] = {random_point(gen, 2.0)};
    const cplx mz[1] = {cplx(0.0, -1.0) * z[0]};
    worst = std::max(worst, std::abs(fock_eval(R, z) - fock_eval(F, mz)));
  }
  const std::vector<cplx> e = fourier_eigenvalues_by_quadrature(8, gauss_hermite(60));
  double eig = 0.0;
  for (int k = 0; k <= 8; ++k) eig = std::max(eig, std::abs(e[static_cast<std::size_t>(k)] - minus_i_power(k)));
  return {worst <= 1e-10 && eig <= 1e-8,
          "F(-iz) mismatch " + g(worst) + " (<= 1e-10), eigenvalue err " + g(eig) + " (<= 1e-8)"};
}

Outcome norm_equality() {
  const auto t0 = std::chrono::steady_clock::now();
  NamedParams gp;
  gp.a = 0.25;  // e^{-2x^2}
  const std::vector<std::pair<std::string, Multiplier>> ms = {{"1", named_multiplier("identity")},
                                                              {"sin", named_multiplier("sin")},
                                                              {"-i sgn", named_multiplier("hilbert")},
                                                              {"e^{-2x^2}", named_multiplier("gaussian", gp)}};
  bool ok = true;
  std::string detail;
  for (const auto& [label, m] : ms) {
    double prev = 0.0, last = 0.0;
    bool monotone = true;
    for (int N : {16, 32, 64, 96}) {
      last = operator_norm_estimate(matrix(m, N).entries).value;
      monotone = monotone && last >= prev - 1e-12;
      prev = last;
    }
    const double sup = 1.0;
    const bool in_window = last >= sup - 5e-3 && last <= sup + 1e-8;
    ok = ok && monotone && in_window;
    detail += label + ": " + fmt("%.6f", last) + (in_window ? "" : " OUT") + (monotone ? "" : " non-monotone") + "; ";
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 60.0;
  return {ok, detail + "window [0.995, 1+1e-8], " + fmt("%.1f", secs) + " s (< 60)"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 gen(404);
  const TruncationBasis b(1, 32);
  const QuadratureRule rule = gauss_hermite(default_matrix_order(32));
  const QuadratureRule direct = gauss_hermite(80);
  double worst = 0.0;
  for (const NamedOperator& op : {identity_pair(), hilbert_pair(), gaussian_pair(0.25)}) {
    const OperatorMatrix s = build_matrix(op.multiplier, b, rule);
    const Symbol phi = op.symbol();
    for (int i = 0; i < 10; ++i) {
      const FockVector f = random_vector(b, 16, gen);
      const cplx z[1] = {random_point(gen, 1.0)};
      worst = std::max(worst, std::abs(fock_eval(apply(s, f), z) - apply_direct_quadrature(phi, f, z[0], direct)));
    }
  }
  return {worst <= 1e-5, "max |matrix - direct| " + g(worst) + " (<= 1e-5)"};
}

Outcome hilbert_closed_form() {
  const Multiplier h = named_multiplier("hilbert");
  const QuadratureRule r = gauss_hermite(200);
  std::mt19937_64 gen(505);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cplx z[1] = {random_point(gen, 2.0)};
    const cplx closed = 2.0 / std::sqrt(std::numbers::pi) * antiderivative_A(z[0] / std::sqrt(2.0));
    worst = std::max(worst, std::abs(symbol_point(h, z, r) - closed));
  }
  const cplx zero[1] = {0.0};
  const bool closed_zero = hilbert_symbol(0.0) == cplx(0.0);
  const double synth_zero = std::abs(symbol_point(h, zero, r));
  const FockVector c = symbol_coeffs(h, TruncationBasis(1, 4), gauss_hermite(200));
  const double deriv = std::abs(c.coeffs[1]);
  const double want = std::sqrt(2.0 / std::numbers::pi);
  return {worst <= 1e-7 && closed_zero && synth_zero <= 1e-15 && std::abs(deriv - want) <= 1e-6,
          "closed-form gap " + g(worst) + " (<= 1e-7), phi(0) closed " + (closed_zero ? "0" : "nonzero") +
              " synthesized " + g(synth_zero) + ", phi'(0) " + fmt("%.12f", deriv) + " vs " + fmt("%.12f", want)};
}

Outcome adjoint_normality() {
  const TruncationBasis b(1, 64);
  const QuadratureRule r = gauss_hermite(default_matrix_order(64));
  NamedParams mp;
  mp.a = 0.5;
  double adj = 0.0;
  for (const Multiplier& m : {named_multiplier("hilbert"), named_multiplier("modulation", mp),
                              product_multiplier({named_multiplier("halfline"), named_multiplier("modulation", mp)})}) {
    adj = std::max(adj, max_abs(adjoint(build_matrix(m, b, r)).entries - build_matrix(conj_multiplier(m), b, r).entries));
  }
  const OperatorMatrix h = build_matrix(named_multiplier("hilbert"), b, r);
  const double comm = commutator_norm(h, adjoint(h), 32);

  GridSpec grid;
  grid.points = 1024;
  bool classes = true;
  double herm = 0.0;
  for (const char* name : {"sin", "tanh", "halfline", "hilbert"}) {
    const Multiplier m = named_multiplier(name);
    std::vector<cplx> vals = essential_range(m, grid);
    const SpectrumClass cls = classify_values(vals);
    const bool imaginary = std::string(name) == "hilbert";
    classes = classes && cls == (imaginary ? SpectrumClass::anti_hermitian : SpectrumClass::hermitian);
    const OperatorMatrix s = build_matrix(m, b, r);
    herm = std::max(herm, max_abs(imaginary ? MatrixXcd(s.entries + s.entries.adjoint()) : MatrixXcd(s.entries - s.entries.adjoint())));
  }
  return {adj <= 1e-12 && comm <= 1e-6 && classes && herm <= 1e-12,
          "adjoint gap " + g(adj) + " (<= 1e-12), [S,S*] block " + g(comm) + " (<= 1e-6), classes " +
              (classes ? "ok" : "wrong") + ", (anti-)Hermitian defect " + g(herm)};
}

Outcome multiplicativity() {
  const int N = 64, d = 32;
  const OperatorMatrix s = matrix(named_multiplier("sin"), N);
  const OperatorMatrix c = matrix(named_multiplier("cos"), N);
  const OperatorMatrix sc = matrix(product_multiplier({named_multiplier("sin"), named_multiplier("cos")}), N);
  const double smooth = max_abs(block(compose(s, c), d) - block(sc, d));
  const OperatorMatrix chi = matrix(named_multiplier("halfline"), N);
  const OperatorMatrix chi2 = matrix(product_multiplier({named_multiplier("halfline"), named_multiplier("halfline")}), N);
  const double product = max_abs(block(compose(chi, chi), d) - block(chi2, d));
  const double idem = max_abs(block(compose(chi, chi), d) - block(chi, d));
  return {smooth <= 1e-6 && product <= 1e-6 && idem <= 1e-6,
          "N=64 block 32: sin*cos " + g(smooth) + ", chi*chi vs S_{chi^2} " + g(product) + ", chi idempotence " + g(idem) +
              " (each <= 1e-6)"};
}

Outcome spectrum_theorem() {
  const int N = 128;
  const TruncationBasis b(1, N);
  const QuadratureRule r = gauss_hermite(default_matrix_order(N));
  SpectrumOptions opt;
  const SpectrumReport t = spectrum_estimate(named_multiplier("tanh"), b, r, opt);
  double outside = 0.0;
  for (const cplx& l : t.eigenvalues) outside = std::max({outside, std::abs(l.real()) - 1.0, std::abs(l.imag())});
  const SpectrumReport h = spectrum_estimate(named_multiplier("halfline"), b, r, opt);
  const SpectrumReport ih = spectrum_estimate(scaled_multiplier(named_multiplier("hilbert"), cplx(0.0, 1.0)), b, r, opt);
  const double fh = fraction_within(h.eigenvalues, h.reference, 0.05);
  const double fih = fraction_within(ih.eigenvalues, ih.reference, 0.05);
  double probe = 0.0;
  for (const SpectrumReport* s : {&t, &h, &ih}) {
    for (const ResolventProbe& p : s->probes) probe = std::max(probe, p.min_singular_value);
  }
  return {outside <= 1e-10 && t.hausdorff <= 0.05 && fh >= 0.9 && fih >= 0.9 && probe <= 0.05,
          "N=128 tanh: outside [-1,1] " + g(outside) + ", Hausdorff " + fmt("%.4f", t.hausdorff) +
              " (<= 0.05); clustered chi " + fmt("%.3f", fh) + ", i*hilbert " + fmt("%.3f", fih) +
              " (>= 0.9); worst probe " + fmt("%.4f", probe) + " (<= 0.05)"};
}

Outcome riesz() {
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = riesz_suite(2, 24);
  const double secs = seconds_since(t0);
  std::string detail;
  for (const Check& c : r.checks) detail += c.id + " " + g(c.value) + "; ";
  return {r.all_passed() && secs < 120.0, detail + fmt("%.1f", secs) + " s (< 120)"};
}

Outcome beurling() {
  const int refine[3] = {24, 32, 40};
  const Report one = beurling_suite(1, 20, refine);
  const Report two = beurling_suite(2, 20);
  std::string detail = "defect N=20,24,32,40:";
  for (const Check& c : one.checks) {
    if (c.id.rfind("isometry_defect", 0) == 0) detail += " " + fmt("%.4f", c.value);
  }
  detail += " (first <= 1e-2, then decreasing); S1^2 vs S2 " + g(two.checks.back().value) + " (<= 1e-2)";
  return {one.all_passed() && two.all_passed(), detail};
}

Outcome counterexample() {
  const int Ns[3] = {16, 64, 256};
  const Report r = counterexample_suite(Ns);
  std::string detail;
  for (const Check& c : r.checks) {
    if (c.id == "sup_on_imaginary_axis_finite" || c.id == "norm_growth_ratio" || c.id == "hilbert_plateau_ratio") {
      detail += c.id + " " + fmt("%.4f", c.value) + "; ";
    }
  }
  return {r.all_passed(), detail + "growth >= 1.2, plateau <= 1.02"};
}

Outcome recovery() {
  const Multiplier s = named_multiplier("sin");
  const FockVector c = symbol_coeffs(s, TruncationBasis(1, 64), gauss_hermite(default_matrix_order(64)));
  double worst = 0.0;
  for (int i = 0; i <= 600; ++i) {
    const double x[1] = {-3.0 + 0.01 * i};
    worst = std::max(worst, std::abs(multiplier_from_symbol_coeffs(c, x) - std::sin(x[0])));
  }
  const Symbol closed = sin_pair().symbol();
  const QuadratureRule r40 = gauss_hermite(40);
  double gap = 0.0;
  for (double xv : {-1.0, 0.25, 1.5}) {
    const double x[1] = {xv};
    gap = std::max(gap, std::abs(multiplier_from_symbol_integral(closed, xv, r40) - multiplier_from_symbol_coeffs(c, x)));
  }
  return {worst <= 1e-6 && gap <= 1e-3,
          "sin roundtrip on |x|<=3 " + g(worst) + " (<= 1e-6), double integral vs coefficients " + g(gap) + " (<= 1e-3)"};
}

Outcome reducing_projections() {
  const int N = 64, d = 32;
  const TruncationBasis b(1, N);
  const QuadratureRule r = gauss_hermite(default_matrix_order(N));
  const OperatorMatrix p = reducing_projection({Box{{0.0}, {kInf}}}, b, r);
  const OperatorMatrix h = build_matrix(named_multiplier("hilbert"), b, r);
  const double selfadj = max_abs(block(p, d) - block(adjoint(p), d));
  const double idem = max_abs(block(compose(p, p), d) - block(p, d));
  const double comm = max_abs(block(compose(p, h), d) - block(compose(h, p), d));
  const OperatorMatrix p1 = reducing_projection({Box{{-kInf}, {0.0}}}, b, r);
  const double zero = max_abs(block(compose(p1, p), d));
  return {selfadj <= 1e-6 && idem <= 1e-6 && comm <= 1e-6 && zero <= 1e-6,
          "N=64 block 32: P-P* " + g(selfadj) + ", P^2-P " + g(idem) + ", [P,H] " + g(comm) + ", P1P2 " + g(zero) +
              " (each <= 1e-6)"};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Bargmann unitarity", bargmann_unitarity},
      {"rotation lemma and Fourier eigenvalues", rotation_lemma},
      {"norm equals sup of the multiplier", norm_equality},
      {"matrix path equals the direct integral", oracle_equivalence},
      {"Hilbert closed form", hilbert_closed_form},
      {"adjoint and normality", adjoint_normality},
      {"multiplicativity", multiplicativity},
      {"spectrum equals essential range", spectrum_theorem},
      {"Riesz identities", riesz},
      {"Beurling isometry and powers", beurling},
      {"unbounded counterexample", counterexample},
      {"multiplier recovery", recovery},
      {"reducing projections", reducing_projections},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %2zu  %-40s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

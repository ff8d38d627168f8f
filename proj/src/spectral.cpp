#include "fock/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "fock/bargmann.hpp"
#include "fock/parallel.hpp"

namespace fock {

HermitianEigen jacobi_eigh(const Eigen::MatrixXcd& h, bool want_vectors) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw ParameterError("jacobi_eigh: matrix must be square");
  if (n > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ParameterError("jacobi_eigh: matrix is not Hermitian");
  }
  Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
  Eigen::MatrixXcd v;
  if (want_vectors) v = Eigen::MatrixXcd::Identity(n, n);

  const double scale = std::max(1.0, a.norm());
  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) s += 2.0 * std::norm(a(p, q));
    return std::sqrt(s);
  };

  HermitianEigen out;
  constexpr int kMaxSweeps = 40;
  int sweep = 0;
  double off = off_norm();
  while (off >= 1e-12 * scale) {
    if (sweep == kMaxSweeps) throw ConvergenceError("jacobi_eigh: too many sweeps", off, sweep);
    ++sweep;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        // Unitary U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] zeroes a(p, q).
        const cplx phase = a(p, q) / r;  // e^{i phi}
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx up = std::conj(phase);  // e^{-i phi}
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * up * akq;
          a(k, q) = s * akp + c * up * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const cplx vkp = v(k, p);
            const cplx vkq = v(k, q);
            v(k, p) = c * vkp - s * up * vkq;
            v(k, q) = s * vkp + c * up * vkq;
          }
        }
      }
    }
    off = off_norm();
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    if (want_vectors) out.vectors.col(k) = v.col(order[k]);
  }
  out.sweeps = sweep;
  return out;
}

std::vector<double> hermitian_eigs(const Eigen::MatrixXcd& h) {
  const HermitianEigen e = jacobi_eigh(h, false);
  return std::vector<double>(e.values.data(), e.values.data() + e.values.size());
}

std::vector<double> hermitian_eigs(const OperatorMatrix& h) { return hermitian_eigs(h.entries); }

double min_singular_value(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  const Eigen::MatrixXcd g = a.adjoint() * a;
  const HermitianEigen e = jacobi_eigh(0.5 * (g + g.adjoint()), false);
  return std::sqrt(std::max(0.0, e.values[0]));
}

const char* to_string(SpectrumClass c) {
  switch (c) {
    case SpectrumClass::hermitian: return "hermitian";
    case SpectrumClass::anti_hermitian: return "anti_hermitian";
    case SpectrumClass::unitary_symbol: return "unitary_symbol";
    case SpectrumClass::general: return "general";
  }
  return "general";
}

SpectrumClass classify_values(std::span<const cplx> values) {
  double big = 1.0;
  for (const cplx& v : values) big = std::max(big, std::abs(v));
  const double tol = 1e-12 * big;
  bool real = true, imag = true, unimodular = true;
  for (const cplx& v : values) {
    real = real && std::abs(v.imag()) <= tol;
    imag = imag && std::abs(v.real()) <= tol;
    unimodular = unimodular && std::abs(std::abs(v) - 1.0) <= 1e-12;
  }
  if (real) return SpectrumClass::hermitian;
  if (imag) return SpectrumClass::anti_hermitian;
  if (unimodular) return SpectrumClass::unitary_symbol;
  return SpectrumClass::general;
}

std::vector<cplx> truncated_spectrum(const OperatorMatrix& s, SpectrumClass cls) {
  const Eigen::MatrixXcd& m = s.entries;
  std::vector<cplx> out;
  if (cls == SpectrumClass::hermitian) {
    for (double v : hermitian_eigs(Eigen::MatrixXcd(0.5 * (m + m.adjoint())))) out.emplace_back(v, 0.0);
    return out;
  }
  if (cls == SpectrumClass::anti_hermitian) {
    const Eigen::MatrixXcd h = cplx(0.0, 1.0) * m;
    for (double v : hermitian_eigs(Eigen::MatrixXcd(0.5 * (h + h.adjoint())))) out.emplace_back(0.0, -v);
    return out;
  }
  // A normal matrix shares its eigenvectors with every real combination of
  // its Hermitian parts; a generic combination separates them.
  const Eigen::MatrixXcd re = 0.5 * (m + m.adjoint());
  const Eigen::MatrixXcd im = (m - m.adjoint()) / cplx(0.0, 2.0);
  const HermitianEigen e = jacobi_eigh(re + 0.5772156649015329 * im, true);
  for (Eigen::Index k = 0; k < e.vectors.cols(); ++k) {
    const Eigen::VectorXcd col = e.vectors.col(k);
    out.push_back(col.dot(m * col));
  }
  return out;
}

double hausdorff_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return (a.empty() && b.empty()) ? 0.0 : std::numeric_limits<double>::infinity();
  auto directed = [](std::span<const cplx> from, std::span<const cplx> to) {
    double worst = 0.0;
    for (const cplx& x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const cplx& y : to) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

double fraction_within(std::span<const cplx> values, std::span<const cplx> targets, double radius) {
  if (values.empty()) return 0.0;
  std::size_t hits = 0;
  for (const cplx& v : values) {
    for (const cplx& t : targets) {
      if (std::abs(v - t) <= radius) {
        ++hits;
        break;
      }
    }
  }
  return double(hits) / double(values.size());
}

namespace {

std::vector<cplx> coarsen(const std::vector<cplx>& pts, double& resolution, std::size_t cap) {
  std::vector<cplx> cur = pts;
  while (cur.size() > cap) {
    resolution *= 2.0;
    std::map<std::pair<long long, long long>, cplx> cells;
    for (const cplx& v : pts) {
      cells.emplace(std::make_pair(std::llround(v.real() / resolution), std::llround(v.imag() / resolution)), v);
    }
    cur.clear();
    for (const auto& [key, v] : cells) cur.push_back(v);
  }
  return cur;
}

}  // namespace

SpectrumReport spectrum_estimate(const Multiplier& m, const TruncationBasis& basis, const QuadratureRule& rule,
                                 const SpectrumOptions& options) {
  SpectrumReport r;
  r.N = basis.max_degree();
  r.order = rule.order;
  const std::vector<cplx> samples = essential_range(m, options.grid);
  r.classification = classify_values(samples);
  r.caveat = r.classification != SpectrumClass::hermitian && r.classification != SpectrumClass::anti_hermitian;
  r.reference_resolution = options.grid.eps_cluster;
  r.reference = coarsen(samples, r.reference_resolution, options.max_reference);

  const OperatorMatrix s = build_matrix(m, basis, rule);
  r.eigenvalues = truncated_spectrum(s, r.classification);
  r.hausdorff = hausdorff_distance(r.eigenvalues, r.reference);

  std::vector<cplx> mus;
  const std::size_t count = std::min<std::size_t>(r.reference.size(), std::max(0, options.max_probes));
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pick = count == 1 ? 0 : i * (r.reference.size() - 1) / (count - 1);
    mus.push_back(r.reference[pick]);
  }
  r.probes.resize(mus.size());
  const bool normal_path =
      r.classification == SpectrumClass::hermitian || r.classification == SpectrumClass::anti_hermitian;
  parallel_for(mus.size(), [&](std::size_t i) {
    double value;
    if (normal_path) {
      value = std::numeric_limits<double>::infinity();
      for (const cplx& lam : r.eigenvalues) value = std::min(value, std::abs(lam - mus[i]));
    } else {
      Eigen::MatrixXcd shifted = s.entries;
      shifted.diagonal().array() -= mus[i];
      value = min_singular_value(shifted);
    }
    r.probes[i] = {mus[i], value};
  });
  return r;
}

CompactnessReport compactness_probe(const Multiplier& m, std::span<const int> Ns, int kmax,
                                    std::span<const double> anchor, double side, int low_degree) {
  const int n = m.n;
  if (static_cast<int>(anchor.size()) != n) throw ParameterError("compactness_probe: anchor dimension mismatch");
  if (!(side > 0.0) || kmax < 0) throw ParameterError("compactness_probe: side must be positive and kmax >= 0");
  CompactnessReport report;
  report.low_degree = low_degree;
  report.zero_operator = true;
  const QuadratureRule panel = gauss_legendre(64);

  for (int N : Ns) {
    const TruncationBasis basis(n, N);
    const OperatorMatrix s = build_matrix(m, basis, gauss_hermite(default_matrix_order(N)));
    report.zero_operator = report.zero_operator && s.entries.cwiseAbs().maxCoeff() == 0.0;
    const std::size_t low = basis.leading_size(std::min(low_degree, N));
    for (int k = 0; k <= kmax; ++k) {
      const double len = side * std::ldexp(1.0, -k);
      // Per-axis integrals of psi_j over [anchor_j, anchor_j + len].
      std::vector<Eigen::VectorXd> axis_integrals;
      const int panels = std::max(1, static_cast<int>(std::ceil(len / 0.25)));
      for (int j = 0; j < n; ++j) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(N + 1);
        for (int p = 0; p < panels; ++p) {
          const double a = anchor[j] + len * p / panels;
          const double b = anchor[j] + len * (p + 1) / panels;
          std::vector<double> xs(panel.order);
          for (int i = 0; i < panel.order; ++i) xs[i] = 0.5 * (a + b) + 0.5 * (b - a) * panel.nodes[i];
          const Eigen::MatrixXd t = hermite_function_table(N, xs);
          for (int i = 0; i < panel.order; ++i) acc += 0.5 * (b - a) * panel.weights[i] * t.col(i);
        }
        axis_integrals.push_back(acc / std::sqrt(len));
      }
      // f_k lives on the frequency side; its preimage has coefficients
      // i^{|alpha|} b_alpha.
      Eigen::VectorXcd f(basis.size());
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        double b = 1.0;
        for (int j = 0; j < n; ++j) b *= axis_integrals[j][basis[idx].components[j]];
        f[idx] = i_power(basis[idx].degree()) * b;
      }
      CompactnessRow row;
      row.N = N;
      row.k = k;
      row.bump_norm = f.norm();
      row.image_norm = (s.entries * f).norm();
      row.ratio = row.bump_norm > 0.0 ? row.image_norm / row.bump_norm : 0.0;
      row.max_low_inner = f.head(low).cwiseAbs().maxCoeff();
      report.rows.push_back(row);
    }
  }
  return report;
}

OperatorMatrix reducing_projection(const std::vector<Box>& boxes, const TruncationBasis& basis,
                                   const QuadratureRule& rule) {
  NamedParams p;
  p.boxes = boxes;
  return build_matrix(named_multiplier("indicator", p), basis, rule);
}

}  // namespace fock

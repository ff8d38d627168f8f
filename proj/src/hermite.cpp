#include "fock/hermite.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

namespace fock {

int MultiIndex::degree() const { return std::accumulate(components.begin(), components.end(), 0); }

struct TruncationBasis::Table {
  std::vector<MultiIndex> indices;
  std::vector<std::size_t> degree_end;  // degree_end[d] = #indices with degree <= d
  std::map<std::vector<int>, std::size_t> lookup;
};

namespace {

// Compositions of `total` into the slots [pos, n), first slot taking the
// largest share first.
void compositions(int total, int pos, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  const int n = static_cast<int>(cur.size());
  if (pos == n - 1) {
    cur[pos] = total;
    out.push_back(MultiIndex{cur});
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur[pos] = v;
    compositions(total - v, pos + 1, cur, out);
  }
}

}  // namespace

TruncationBasis::TruncationBasis(int n, int N) : n_(n), N_(N) {
  if (n < 1) throw ParameterError("TruncationBasis: dimension must be >= 1");
  if (N < 0) throw ParameterError("TruncationBasis: maximum degree must be >= 0");
  auto table = std::make_shared<Table>();
  std::vector<int> cur(n, 0);
  for (int d = 0; d <= N; ++d) {
    compositions(d, 0, cur, table->indices);
    table->degree_end.push_back(table->indices.size());
  }
  for (std::size_t k = 0; k < table->indices.size(); ++k) table->lookup.emplace(table->indices[k].components, k);
  table_ = std::move(table);
}

std::size_t TruncationBasis::size() const { return table_ ? table_->indices.size() : 0; }

const MultiIndex& TruncationBasis::multi_index_of(std::size_t k) const {
  if (!table_ || k >= table_->indices.size()) throw ParameterError("TruncationBasis: position out of range");
  return table_->indices[k];
}

std::size_t TruncationBasis::index_of(const MultiIndex& alpha) const {
  if (!table_) throw ParameterError("TruncationBasis: empty basis");
  auto it = table_->lookup.find(alpha.components);
  if (it == table_->lookup.end()) throw ParameterError("TruncationBasis: multi-index not in basis");
  return it->second;
}

std::size_t TruncationBasis::leading_size(int d) const {
  if (!table_ || d < 0) return 0;
  if (d >= N_) return size();
  return table_->degree_end[d];
}

FockVector::FockVector(TruncationBasis b, Eigen::VectorXcd c) : basis(std::move(b)), coeffs(std::move(c)) {
  if (static_cast<std::size_t>(coeffs.size()) != basis.size()) {
    throw ParameterError("FockVector: coefficient count does not match basis size");
  }
}

HermiteVector::HermiteVector(TruncationBasis b, Eigen::VectorXcd c) : basis(std::move(b)), coeffs(std::move(c)) {
  if (static_cast<std::size_t>(coeffs.size()) != basis.size()) {
    throw ParameterError("HermiteVector: coefficient count does not match basis size");
  }
}

void require_same_basis(const TruncationBasis& a, const TruncationBasis& b, const char* where) {
  if (!(a == b)) {
    throw ParameterError(std::string(where) + ": basis mismatch (n=" + std::to_string(a.n()) + ",N=" +
                         std::to_string(a.max_degree()) + " vs n=" + std::to_string(b.n()) +
                         ",N=" + std::to_string(b.max_degree()) + ")");
  }
}

Eigen::MatrixXd hermite_function_table(int kmax, std::span<const double> xs) {
  if (kmax < 0) throw ParameterError("hermite_function_table: kmax must be >= 0");
  const double log_c0 = 0.25 * std::log(2.0 / std::numbers::pi);
  Eigen::MatrixXd table(kmax + 1, xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double t = std::numbers::sqrt2 * x;
    // value_k = p_k * exp(log_scale)
    double log_scale = log_c0 - x * x;
    double prev = 0.0;
    double cur = 1.0;
    table(0, i) = std::exp(log_scale);
    for (int k = 0; k < kmax; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * t * cur - std::sqrt(double(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
      if (std::abs(cur) > 1e100) {
        cur *= 1e-100;
        prev *= 1e-100;
        log_scale += 100.0 * std::numbers::ln10;
      }
      table(k + 1, i) = cur * std::exp(log_scale);
    }
  }
  return table;
}

double psi_1d(int k, double x) {
  if (k < 0) throw ParameterError("psi_1d: negative index");
  const double xs[1] = {x};
  return hermite_function_table(k, xs)(k, 0);
}

double psi_eval(const MultiIndex& alpha, std::span<const double> x) {
  if (static_cast<std::size_t>(alpha.dim()) != x.size()) throw ParameterError("psi_eval: dimension mismatch");
  double v = 1.0;
  for (int j = 0; j < alpha.dim(); ++j) v *= psi_1d(alpha.components[j], x[j]);
  return v;
}

Eigen::VectorXd hermite_ratio_row(int kmax, double x) {
  Eigen::VectorXd row(kmax + 1);
  const double t = std::numbers::sqrt2 * x;
  double prev = 0.0;
  double cur = 1.0;
  row[0] = 1.0;
  for (int k = 0; k < kmax; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * t * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    row[k + 1] = cur;
  }
  return row;
}

namespace {

double squared_norm(std::span<const cplx> z) {
  double s = 0.0;
  for (const cplx& v : z) s += std::norm(v);
  return s;
}

std::vector<double> interleave(std::span<const cplx> z) {
  std::vector<double> out;
  for (const cplx& v : z) {
    out.push_back(v.real());
    out.push_back(v.imag());
  }
  return out;
}

}  // namespace

cplx fock_eval(const FockVector& F, std::span<const cplx> z) {
  const int n = F.basis.n();
  if (static_cast<int>(z.size()) != n) throw ParameterError("fock_eval: point dimension does not match basis");
  if (squared_norm(z) > kFockOverflowGuard) {
    throw EvaluationError("fock_eval: |z|^2 exceeds the overflow guard", interleave(z));
  }
  const int N = F.basis.max_degree();
  // powers[j][k] = z_j^k / sqrt(k!)
  std::vector<std::vector<cplx>> powers(n, std::vector<cplx>(N + 1));
  for (int j = 0; j < n; ++j) {
    powers[j][0] = 1.0;
    for (int k = 0; k < N; ++k) powers[j][k + 1] = powers[j][k] * z[j] / std::sqrt(double(k + 1));
  }
  cplx sum = 0.0;
  for (std::size_t k = 0; k < F.basis.size(); ++k) {
    const cplx c = F.coeffs[k];
    if (c == cplx(0.0)) continue;
    cplx term = c;
    const auto& alpha = F.basis[k].components;
    for (int j = 0; j < n; ++j) term *= powers[j][alpha[j]];
    sum += term;
  }
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
    throw EvaluationError("fock_eval: non-finite value", interleave(z));
  }
  return sum;
}

cplx reproducing_kernel(std::span<const cplx> z, std::span<const cplx> w) {
  if (z.size() != w.size()) throw ParameterError("reproducing_kernel: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * std::conj(w[j]);
  return std::exp(s);
}

cplx weyl_apply(const FockVector& F, std::span<const double> a, std::span<const cplx> z) {
  const std::size_t n = z.size();
  if (a.size() != n) throw ParameterError("weyl_apply: shift dimension mismatch");
  std::vector<cplx> shifted(n);
  cplx phase = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    shifted[j] = z[j] - a[j];
    phase += z[j] * a[j] - 0.5 * a[j] * a[j];
  }
  if (squared_norm(z) > kFockOverflowGuard) {
    throw EvaluationError("weyl_apply: |z|^2 exceeds the overflow guard", interleave(z));
  }
  return fock_eval(F, shifted) * std::exp(phase);
}

FockVector weyl_coeffs(const FockVector& F, std::span<const double> a) {
  const int n = F.basis.n();
  if (static_cast<int>(a.size()) != n) throw ParameterError("weyl_coeffs: shift dimension mismatch");
  double a2 = 0.0;
  for (double v : a) a2 += v * v;
  const int N = F.basis.max_degree();
  const int pad = 40 + static_cast<int>(std::ceil(12.0 * a2));
  const TruncationBasis big(n, N + pad);
  const std::size_t size = big.size();

  // Neighbour tables for the raising and lowering moves on every axis.
  std::vector<std::vector<long>> up(n, std::vector<long>(size, -1));
  std::vector<std::vector<long>> down(n, std::vector<long>(size, -1));
  for (std::size_t k = 0; k < size; ++k) {
    MultiIndex alpha = big[k];
    const bool at_top = alpha.degree() == N + pad;
    for (int j = 0; j < n; ++j) {
      if (!at_top) {
        ++alpha.components[j];
        up[j][k] = static_cast<long>(big.index_of(alpha));
        --alpha.components[j];
      }
      if (alpha.components[j] > 0) {
        --alpha.components[j];
        down[j][k] = static_cast<long>(big.index_of(alpha));
        ++alpha.components[j];
      }
    }
  }

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size);
  v.head(F.basis.size()) = F.coeffs;

  for (int j = 0; j < n; ++j) {
    if (a[j] == 0.0) continue;
    auto generator = [&](const Eigen::VectorXcd& x) {
      Eigen::VectorXcd y = Eigen::VectorXcd::Zero(size);
      for (std::size_t k = 0; k < size; ++k) {
        const int ak = big[k].components[j];
        if (up[j][k] >= 0) y[up[j][k]] += std::sqrt(double(ak + 1)) * x[k];
        if (down[j][k] >= 0) y[down[j][k]] -= std::sqrt(double(ak)) * x[k];
      }
      return y;
    };
    const double gen_norm = 2.0 * std::sqrt(double(N + pad + 1));
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(a[j]) * gen_norm)));
    const double h = a[j] / steps;
    for (int s = 0; s < steps; ++s) {
      Eigen::VectorXcd term = v;
      Eigen::VectorXcd acc = v;
      for (int p = 1; p <= 60; ++p) {
        term = generator(term) * (h / p);
        acc += term;
        if (term.norm() <= 1e-18 * acc.norm()) break;
      }
      v = acc;
    }
  }
  return FockVector(F.basis, v.head(F.basis.size()));
}

}  // namespace fock

#include "detail.hpp"

#include <cmath>
#include <mutex>
#include <optional>

#include "fock/parallel.hpp"

namespace fock::detail {

std::vector<std::size_t> WeightedSamples::dims() const {
  std::vector<std::size_t> d;
  for (const LineRule& ax : axes) d.push_back(ax.size());
  return d;
}

WeightedSamples sample_multiplier(const Multiplier& m, const QuadratureRule& rule, double rate) {
  WeightedSamples s;
  const int n = m.n;
  for (int j = 0; j < n; ++j) {
    const std::vector<double>& br = j < static_cast<int>(m.breaks.size()) ? m.breaks[j] : std::vector<double>{};
    s.axes.push_back(gaussian_line_rule(rule, rate, 0.0, br));
  }
  std::size_t inner = 1;
  for (int j = 1; j < n; ++j) inner *= s.axes[j].size();
  const std::size_t outer = s.axes[0].size();
  s.re.assign(outer * inner, 0.0);
  s.im.assign(outer * inner, 0.0);

  std::mutex failure_lock;
  std::optional<EvaluationError> failure;
  parallel_for(outer, [&](std::size_t i0) {
    std::vector<int> idx(n, 0);
    std::vector<double> x(n);
    for (std::size_t r = 0; r < inner; ++r) {
      // decode r into the trailing axes, last axis fastest
      std::size_t rem = r;
      for (int j = n - 1; j >= 1; --j) {
        idx[j] = static_cast<int>(rem % s.axes[j].size());
        rem /= s.axes[j].size();
      }
      double w = s.axes[0].weights[i0];
      x[0] = s.axes[0].nodes[i0];
      for (int j = 1; j < n; ++j) {
        x[j] = s.axes[j].nodes[idx[j]];
        w *= s.axes[j].weights[idx[j]];
      }
      const cplx v = m.eval(x);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure.emplace("multiplier is not finite at a quadrature node", x);
        return;
      }
      s.re[i0 * inner + r] = w * v.real();
      s.im[i0 * inner + r] = w * v.imag();
    }
  });
  if (failure) throw *failure;
  return s;
}

std::vector<double> contract_axes(std::vector<double> data, std::vector<std::size_t> dims,
                                  const std::vector<Eigen::MatrixXd>& tables) {
  using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const std::size_t n = dims.size();
  for (std::size_t step = 0; step < n; ++step) {
    const Eigen::MatrixXd& table = tables[n - 1 - step];
    const std::size_t last = dims.back();
    const std::size_t rest = data.size() / last;
    const std::size_t k = static_cast<std::size_t>(table.rows());
    Eigen::Map<const RowMat> x(data.data(), rest, last);
    const RowMat y = x * table.transpose();
    std::vector<double> rotated(k * rest);
    Eigen::Map<RowMat>(rotated.data(), k, rest) = y.transpose();
    data.swap(rotated);
    dims.pop_back();
    dims.insert(dims.begin(), k);
  }
  return data;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace fock::detail

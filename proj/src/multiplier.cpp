#include "fock/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

namespace fock {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Multiplier make(int n, std::string name, std::function<cplx(std::span<const double>)> eval,
                std::optional<double> sup, std::string description) {
  Multiplier m;
  m.n = n;
  m.kind = MultiplierKind::named;
  m.name = std::move(name);
  m.eval = std::move(eval);
  m.declared_sup = sup;
  m.breaks.assign(n, {});
  m.description = std::move(description);
  return m;
}

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

void check_dim(std::span<const double> x, int n, const char* who) {
  if (static_cast<int>(x.size()) != n) throw ParameterError(std::string(who) + ": point dimension mismatch");
}

Multiplier one_dimensional(const std::string& name, std::function<cplx(double)> f, std::optional<double> sup,
                           std::string description, std::vector<double> breaks = {}) {
  auto eval = [f = std::move(f), name](std::span<const double> x) {
    check_dim(x, 1, name.c_str());
    return f(x[0]);
  };
  Multiplier m = make(1, name, std::move(eval), sup, std::move(description));
  m.breaks[0] = std::move(breaks);
  return m;
}

Multiplier indicator(std::vector<Box> boxes, const std::string& name) {
  if (boxes.empty()) throw ParameterError("indicator: at least one box is required");
  const std::size_t n = boxes.front().lo.size();
  if (n == 0) throw ParameterError("indicator: boxes must have at least one axis");
  std::string desc = "named:" + name + "(";
  std::vector<std::set<double>> edges(n);
  for (const Box& b : boxes) {
    if (b.lo.size() != n || b.hi.size() != n) throw ParameterError("indicator: boxes disagree on dimension");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(b.hi[j] > b.lo[j])) throw ParameterError("indicator: box has empty interior");
      if (std::isfinite(b.lo[j])) edges[j].insert(b.lo[j]);
      if (std::isfinite(b.hi[j])) edges[j].insert(b.hi[j]);
      desc += "[" + fmt(b.lo[j]) + "," + fmt(b.hi[j]) + "]";
    }
    desc += ";";
  }
  desc += ")";
  auto eval = [boxes, n](std::span<const double> x) -> cplx {
    if (x.size() != n) throw ParameterError("indicator: point dimension mismatch");
    for (const Box& b : boxes) {
      bool inside = true;
      for (std::size_t j = 0; j < n && inside; ++j) inside = x[j] >= b.lo[j] && x[j] < b.hi[j];
      if (inside) return 1.0;
    }
    return 0.0;
  };
  Multiplier m = make(static_cast<int>(n), name, std::move(eval), 1.0, desc);
  for (std::size_t j = 0; j < n; ++j) m.breaks[j].assign(edges[j].begin(), edges[j].end());
  return m;
}

}  // namespace

Multiplier named_multiplier(const std::string& name, const NamedParams& p) {
  const int dim = p.n > 0 ? p.n : 1;
  if (name == "identity" || name == "zero" || name == "constant") {
    const cplx value = name == "identity" ? cplx(1.0) : (name == "zero" ? cplx(0.0) : p.value);
    std::string desc = "named:" + name + "(n=" + std::to_string(dim);
    if (name == "constant") desc += ",value=" + fmt(value.real()) + "," + fmt(value.imag());
    desc += ")";
    auto eval = [value, dim](std::span<const double> x) {
      check_dim(x, dim, "constant multiplier");
      return value;
    };
    return make(dim, name, eval, std::abs(value), desc);
  }
  if (name == "hilbert") {
    return one_dimensional(name, [](double x) { return cplx(0.0, -sgn(x)); }, 1.0, "named:hilbert", {0.0});
  }
  if (name == "sign") {
    return one_dimensional(name, [](double x) { return cplx(sgn(x)); }, 1.0, "named:sign", {0.0});
  }
  if (name == "halfline") {
    return one_dimensional(name, [](double x) { return cplx(x >= 0.0 ? 1.0 : 0.0); }, 1.0, "named:halfline", {0.0});
  }
  if (name == "sin") return one_dimensional(name, [](double x) { return cplx(std::sin(x)); }, 1.0, "named:sin");
  if (name == "cos") return one_dimensional(name, [](double x) { return cplx(std::cos(x)); }, 1.0, "named:cos");
  if (name == "tanh") return one_dimensional(name, [](double x) { return cplx(std::tanh(x)); }, 1.0, "named:tanh");
  if (name == "gaussian") {
    if (!(p.a > 0.0 && p.a < 0.5)) throw ParameterError("gaussian multiplier requires 0 < a < 1/2");
    const double rate = 4.0 * p.a / (1.0 - 2.0 * p.a);
    return one_dimensional(name, [rate](double x) { return cplx(std::exp(-rate * x * x)); }, 1.0,
                           "named:gaussian(a=" + fmt(p.a) + ")");
  }
  if (name == "modulation") {
    if (!std::isfinite(p.a)) throw ParameterError("modulation multiplier requires a finite real a");
    const double a = p.a;
    const double c0 = p.c0.value_or(std::exp(0.5 * a * a));
    return one_dimensional(name, [a, c0](double x) { return c0 * std::polar(1.0, -2.0 * x * a); }, std::abs(c0),
                           "named:modulation(a=" + fmt(a) + ",c0=" + fmt(c0) + ")");
  }
  if (name == "counterexample") {
    auto f = [](double x) -> cplx {
      if (x == 0.0) return std::numeric_limits<double>::infinity();
      return std::pow(std::abs(x), -0.2) * std::exp(-x * x);
    };
    return one_dimensional(name, f, std::nullopt, "named:counterexample", {0.0});
  }
  if (name == "riesz") {
    const int n = p.n > 0 ? p.n : 2;
    if (n < 2) throw ParameterError("riesz multiplier requires n >= 2");
    if (p.j < 1 || p.j > n) throw ParameterError("riesz multiplier requires 1 <= j <= n");
    const int j = p.j - 1;
    auto eval = [n, j](std::span<const double> x) -> cplx {
      check_dim(x, n, "riesz");
      double r2 = 0.0;
      for (double v : x) r2 += v * v;
      if (r2 == 0.0) return 0.0;
      return cplx(0.0, -x[j] / std::sqrt(r2));
    };
    Multiplier m = make(n, name, eval, 1.0,
                        "named:riesz(j=" + std::to_string(p.j) + ",n=" + std::to_string(n) + ")");
    for (auto& b : m.breaks) b = {0.0};
    return m;
  }
  if (name == "beurling") {
    if (p.k < 1) throw ParameterError("beurling multiplier requires k >= 1");
    const int k = p.k;
    auto eval = [k](std::span<const double> x) -> cplx {
      check_dim(x, 2, "beurling");
      if (x[0] == 0.0 && x[1] == 0.0) return 0.0;
      return std::polar(1.0, -2.0 * k * std::atan2(x[1], x[0]));
    };
    Multiplier m = make(2, name, eval, 1.0, "named:beurling(k=" + std::to_string(k) + ")");
    for (auto& b : m.breaks) b = {0.0};
    return m;
  }
  if (name == "indicator") return indicator(p.boxes, name);
  throw ParameterError("unknown multiplier name '" + name + "'");
}

Multiplier grid_multiplier(std::vector<std::vector<double>> axes, std::vector<cplx> values, Interp interp) {
  const std::size_t n = axes.size();
  if (n == 0) throw ParameterError("grid multiplier: at least one axis is required");
  std::size_t total = 1;
  for (const auto& ax : axes) {
    if (ax.empty()) throw ParameterError("grid multiplier: empty axis");
    for (std::size_t i = 1; i < ax.size(); ++i) {
      if (!(ax[i] > ax[i - 1])) throw ParameterError("grid multiplier: axis nodes must be strictly increasing");
    }
    total *= ax.size();
  }
  if (values.size() != total) throw ParameterError("grid multiplier: value count does not match the grid");
  double sup = 0.0;
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ParameterError("grid multiplier: non-finite value");
    sup = std::max(sup, std::abs(v));
  }
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t j = n - 1; j > 0; --j) stride[j - 1] = stride[j] * axes[j].size();

  std::string desc = std::string("grid:") + (interp == Interp::linear ? "linear" : "nearest");
  for (const auto& ax : axes) desc += "|" + std::to_string(ax.size()) + ":" + fmt(ax.front()) + ":" + fmt(ax.back());
  // A cheap fingerprint of the values keeps distinct grids distinguishable.
  double fingerprint = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) fingerprint += (i % 7 + 1) * (values[i].real() + 3.0 * values[i].imag());
  desc += "|" + fmt(fingerprint);

  auto eval = [axes, values, stride, interp, n](std::span<const double> x) -> cplx {
    if (x.size() != n) throw ParameterError("grid multiplier: point dimension mismatch");
    if (interp == Interp::nearest) {
      std::size_t offset = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& ax = axes[j];
        auto it = std::lower_bound(ax.begin(), ax.end(), x[j]);
        std::size_t i = static_cast<std::size_t>(it - ax.begin());
        if (i == ax.size()) i = ax.size() - 1;
        else if (i > 0 && (x[j] - ax[i - 1]) <= (ax[i] - x[j])) i = i - 1;
        offset += i * stride[j];
      }
      return values[offset];
    }
    std::vector<std::size_t> lo(n);
    std::vector<double> frac(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ax = axes[j];
      if (ax.size() == 1 || x[j] <= ax.front()) {
        lo[j] = 0;
        frac[j] = 0.0;
      } else if (x[j] >= ax.back()) {
        lo[j] = ax.size() - 2;
        frac[j] = 1.0;
      } else {
        auto it = std::upper_bound(ax.begin(), ax.end(), x[j]);
        lo[j] = static_cast<std::size_t>(it - ax.begin()) - 1;
        frac[j] = (x[j] - ax[lo[j]]) / (ax[lo[j] + 1] - ax[lo[j]]);
      }
    }
    cplx acc = 0.0;
    for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
      double w = 1.0;
      std::size_t offset = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const bool upper = (corner >> j) & 1U;
        if (upper && axes[j].size() == 1) {
          w = 0.0;
          break;
        }
        w *= upper ? frac[j] : 1.0 - frac[j];
        offset += (lo[j] + (upper ? 1 : 0)) * stride[j];
      }
      if (w != 0.0) acc += w * values[offset];
    }
    return acc;
  };

  Multiplier m;
  m.n = static_cast<int>(n);
  m.kind = MultiplierKind::grid;
  m.name = "grid";
  m.eval = std::move(eval);
  m.declared_sup = sup;
  m.breaks.assign(n, {});
  if (interp == Interp::nearest) {
    for (std::size_t j = 0; j < n; ++j) {
      if (axes[j].size() > 17) continue;
      for (std::size_t i = 1; i < axes[j].size(); ++i) m.breaks[j].push_back(0.5 * (axes[j][i - 1] + axes[j][i]));
    }
  }
  m.description = desc;
  return m;
}

Multiplier product_multiplier(std::vector<Multiplier> factors) {
  if (factors.empty()) throw ParameterError("product multiplier: no factors");
  const int n = factors.front().n;
  std::optional<double> sup = 1.0;
  std::vector<std::set<double>> edges(n);
  std::string desc = "product(";
  for (const Multiplier& f : factors) {
    if (f.n != n) throw ParameterError("product multiplier: factors disagree on dimension");
    if (sup && f.declared_sup) *sup *= *f.declared_sup;
    else sup.reset();
    for (int j = 0; j < n; ++j) edges[j].insert(f.breaks[j].begin(), f.breaks[j].end());
    desc += f.description + ";";
  }
  desc += ")";
  Multiplier m;
  m.n = n;
  m.kind = MultiplierKind::product;
  m.name = "product";
  m.eval = [factors](std::span<const double> x) {
    cplx v = 1.0;
    for (const Multiplier& f : factors) v *= f.eval(x);
    return v;
  };
  m.declared_sup = sup;
  m.breaks.resize(n);
  for (int j = 0; j < n; ++j) m.breaks[j].assign(edges[j].begin(), edges[j].end());
  m.description = desc;
  return m;
}

Multiplier scaled_multiplier(const Multiplier& m, cplx factor) {
  Multiplier out = m;
  out.eval = [inner = m.eval, factor](std::span<const double> x) { return factor * inner(x); };
  if (m.declared_sup) out.declared_sup = *m.declared_sup * std::abs(factor);
  out.description = "scaled(" + fmt(factor.real()) + "," + fmt(factor.imag()) + ";" + m.description + ")";
  out.name = m.name;
  return out;
}

Multiplier conj_multiplier(const Multiplier& m) {
  Multiplier out = m;
  out.eval = [inner = m.eval](std::span<const double> x) { return std::conj(inner(x)); };
  out.description = "conj(" + m.description + ")";
  return out;
}

void for_each_grid_point(int n, const GridSpec& grid, const std::function<void(std::span<const double>)>& visit) {
  if (n < 1) throw ParameterError("grid: dimension must be >= 1");
  if (!(grid.R > 0.0) || grid.points < 1) throw ParameterError("grid: R and points must be positive");
  constexpr double kMaxPoints = 4194304.0;  // 2^22
  const int per_axis = std::max(1, std::min(grid.points, static_cast<int>(std::floor(std::pow(kMaxPoints, 1.0 / n) + 1e-9))));
  const double step = 2.0 * grid.R / per_axis;
  std::vector<int> idx(n, 0);
  std::vector<double> x(n);
  while (true) {
    for (int j = 0; j < n; ++j) x[j] = -grid.R + (idx[j] + 0.5) * step;
    visit(x);
    int d = n - 1;
    while (d >= 0 && ++idx[d] == per_axis) idx[d--] = 0;
    if (d < 0) break;
  }
}

SupNormReport sup_norm(const Multiplier& m, const GridSpec& grid) {
  SupNormReport r;
  r.R = grid.R;
  int count = 0;
  for_each_grid_point(m.n, grid, [&](std::span<const double> x) {
    r.value = std::max(r.value, std::abs(m.eval(x)));
    ++count;
  });
  r.points_per_axis = static_cast<int>(std::lround(std::pow(double(count), 1.0 / m.n)));
  return r;
}

std::vector<cplx> essential_range(const Multiplier& m, const GridSpec& grid) {
  if (!(grid.eps_cluster > 0.0)) throw ParameterError("essential_range: eps_cluster must be positive");
  std::map<std::pair<long long, long long>, cplx> cells;
  for_each_grid_point(m.n, grid, [&](std::span<const double> x) {
    const cplx v = m.eval(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return;
    const auto key = std::make_pair(std::llround(v.real() / grid.eps_cluster), std::llround(v.imag() / grid.eps_cluster));
    cells.emplace(key, v);
  });
  std::vector<cplx> out;
  out.reserve(cells.size());
  for (const auto& [key, v] : cells) out.push_back(v);
  return out;
}

}  // namespace fock

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

enum class MultiplierKind { named, grid, product };

/// A bounded function m on R^n. `breaks[j]` lists coordinates on axis j
/// across which m may jump; quadrature splits its panels there.
struct Multiplier {
  int n = 1;
  MultiplierKind kind = MultiplierKind::named;
  std::string name;
  std::function<cplx(std::span<const double>)> eval;
  std::optional<double> declared_sup;
  std::vector<std::vector<double>> breaks;
  /// Canonical description, stable across runs (used for provenance hashes).
  std::string description;

  cplx operator()(std::span<const double> x) const { return eval(x); }
  cplx at(double x) const {
    const double p[1] = {x};
    return eval(p);
  }
};

/// Axis-aligned box; infinite bounds are allowed.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
};

/// Parameters for the named multipliers. Unused fields are ignored.
struct NamedParams {
  double a = 0.25;                // gaussian, modulation
  std::optional<double> c0;       // modulation constant; default e^{a^2/2}
  int j = 1;                      // riesz component (1-based)
  int n = 0;                      // dimension; 0 picks the natural default
  int k = 1;                      // beurling power
  cplx value = 1.0;               // constant
  std::vector<Box> boxes;         // indicator
};

/// identity, zero, constant, hilbert, sign, gaussian, modulation, riesz,
/// beurling, counterexample, sin, cos, tanh, halfline, indicator.
Multiplier named_multiplier(const std::string& name, const NamedParams& params = {});

enum class Interp { nearest, linear };

/// Tensor grid; `values` is row-major with the last axis fastest. Points
/// outside the grid take the value of the nearest face.
Multiplier grid_multiplier(std::vector<std::vector<double>> axes, std::vector<cplx> values,
                           Interp interp = Interp::linear);

Multiplier product_multiplier(std::vector<Multiplier> factors);
Multiplier scaled_multiplier(const Multiplier& m, cplx factor);
Multiplier conj_multiplier(const Multiplier& m);

/// Sampling grid: `points` cell centres per axis on [-R, R]; values closer
/// than eps_cluster are merged when building the essential range.
struct GridSpec {
  double R = 10.0;
  int points = 2048;
  double eps_cluster = 1e-6;
};

struct SupNormReport {
  double value = 0.0;
  double R = 0.0;
  int points_per_axis = 0;
};

SupNormReport sup_norm(const Multiplier& m, const GridSpec& grid = {});

/// Deduplicated sampled values of m, sorted by (re, im).
std::vector<cplx> essential_range(const Multiplier& m, const GridSpec& grid = {});

/// Visits every cell centre of the grid (n-dimensional, last axis fastest).
/// Large n reduces the per-axis count so at most ~2^22 points are visited.
void for_each_grid_point(int n, const GridSpec& grid, const std::function<void(std::span<const double>)>& visit);

}  // namespace fock

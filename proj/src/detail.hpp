#pragma once

// Helpers shared by the symbol and operator translation units.

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "fock/multiplier.hpp"
#include "fock/quadrature.hpp"

namespace fock::detail {

/// m sampled on the tensor product of per-axis line rules, premultiplied by
/// the product weights. Real and imaginary parts are kept apart so every
/// contraction below is a real GEMM. Layout is row-major, last axis fastest.
struct WeightedSamples {
  std::vector<LineRule> axes;
  std::vector<double> re;
  std::vector<double> im;
  std::vector<std::size_t> dims() const;
};

WeightedSamples sample_multiplier(const Multiplier& m, const QuadratureRule& rule, double rate);

/// Contracts every axis j of `data` (dims[j] long) against tables[j]
/// (K_j x dims[j]). Returns the K_1 x ... x K_n tensor, row-major.
std::vector<double> contract_axes(std::vector<double> data, std::vector<std::size_t> dims,
                                  const std::vector<Eigen::MatrixXd>& tables);

std::uint64_t fnv1a(const std::string& text);

}  // namespace fock::detail

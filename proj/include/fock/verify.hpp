#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fock/gallery.hpp"
#include "fock/multiplier.hpp"

namespace fock {

/// Knobs shared by the invariant suites. Zero for N or order means "use the
/// suite's own default".
struct VerifyConfig {
  std::uint64_t seed = 0x5eedULL;
  int N = 0;
  int order = 0;
  GridSpec grid;
  /// Clustering calibration: at least `cluster_fraction` of the truncated
  /// eigenvalues within `cluster_radius` of the essential range.
  double cluster_radius = 0.05;
  double cluster_fraction = 0.9;
  double hausdorff_bound = 0.05;
};

/// quad, hermite, bargmann, multiplier, symbol, operator, spectral, gallery.
const std::vector<std::string>& suite_names();

/// Runs one suite. Unknown names raise ParameterError.
std::vector<Report> run_suite(const std::string& name, const VerifyConfig& config = {});

}  // namespace fock

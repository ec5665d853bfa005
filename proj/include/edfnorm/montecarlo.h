// Copyright 2026 The edfnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Simulation checks of the null limit theory and of the first-order limits
// under alternatives.

#ifndef EDFNORM_MONTECARLO_H_
#define EDFNORM_MONTECARLO_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "edfnorm/alternatives.h"
#include "edfnorm/test_kind.h"

namespace edfnorm {

enum class Process { kEta, kXi };

std::string_view to_string(Process process);
Process parse_process(std::string_view name);

struct CovarianceEstimate {
  std::vector<double> grid;
  Process process = Process::kEta;
  Eigen::MatrixXd empirical_cov;
  // Delete-a-group jackknife standard errors (kJackknifeGroups groups).
  Eigen::MatrixXd se;
  std::size_t replicates = 0;
  std::size_t n = 0;
};

inline constexpr std::size_t kJackknifeGroups = 100;

// Covariance over replicates of sqrt(n) eta_n(x) or sqrt(n) xi_n(x) at the
// grid points, for N(0,1) samples with fitted mean and scale:
//   eta_n(x) = F_n(mu_hat + sigma_hat x) - Phi(x),
//   xi_n(x)  = eta_n(x) - int eta_n dPhi = eta_n(x) - 1/2 + mean Phi(s_i),
// s_i the standardized observations. Requires n >= 500,
// replicates >= 2000 and grid points in [-3, 3].
CovarianceEstimate simulate_process_cov(Process process, std::size_t n,
                                        std::size_t replicates,
                                        const std::vector<double>& grid,
                                        std::uint64_t seed,
                                        unsigned threads = 1);

struct BLimitCheck {
  double observed = 0.0;
  double predicted = 0.0;
  // |observed - predicted| / |predicted|; the absolute difference when the
  // prediction is zero.
  double rel_err = 0.0;
};

// One sample of size n >= 1e5 from g(.; theta); compares the unscaled
// statistic with its first-order limit b_limit(test, family, theta).
BLimitCheck validate_b_limit(EdfTest test, const FamilyPtr& family,
                             double theta, std::size_t n, std::uint64_t seed);

// Sorted replicates (>= 1e4) of the scaled statistic under N(0,1).
std::vector<double> null_distribution(EdfTest test, std::size_t n,
                                      std::size_t replicates,
                                      std::uint64_t seed, unsigned threads = 1);

}  // namespace edfnorm

#endif  // EDFNORM_MONTECARLO_H_

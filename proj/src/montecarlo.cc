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

#include "edfnorm/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "edfnorm/edf_tests.h"
#include "edfnorm/errors.h"
#include "edfnorm/numerics.h"
#include "edfnorm/random.h"
#include "edfnorm/slopes.h"
#include "parallel.h"

namespace edfnorm {

std::string_view to_string(Process process) {
  return process == Process::kEta ? "eta" : "xi";
}

Process parse_process(std::string_view name) {
  if (name == "eta") return Process::kEta;
  if (name == "xi") return Process::kXi;
  throw DomainError("unknown process '" + std::string(name) +
                    "' (expected eta or xi)");
}

CovarianceEstimate simulate_process_cov(Process process, std::size_t n,
                                        std::size_t replicates,
                                        const std::vector<double>& grid,
                                        std::uint64_t seed, unsigned threads) {
  if (n < 500) throw DomainError("simulate_process_cov: need n >= 500");
  if (replicates < 2000) {
    throw DomainError("simulate_process_cov: need replicates >= 2000");
  }
  if (grid.empty()) throw DomainError("simulate_process_cov: empty grid");
  for (double x : grid) {
    if (!(x >= -3.0 && x <= 3.0)) {
      std::ostringstream msg;
      msg << "simulate_process_cov: grid point " << x
          << " outside [-3, 3]";
      throw DomainError(msg.str());
    }
  }

  const auto k = static_cast<Eigen::Index>(grid.size());
  const auto reps = static_cast<Eigen::Index>(replicates);
  const double root_n = std::sqrt(static_cast<double>(n));
  Eigen::MatrixXd paths(reps, k);

  detail::parallel_for(replicates, threads, [&](std::size_t r) {
    RandomStream rng(seed, r);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.normal();
    const Estimates e = mle(x);
    const double sigma = std::sqrt(e.sigma2_hat);
    double mean_phi = 0.0;
    for (auto& v : x) {
      v = (v - e.mu_hat) / sigma;
      mean_phi += norm_cdf(v);
    }
    mean_phi /= static_cast<double>(n);
    std::sort(x.begin(), x.end());
    const double centering = process == Process::kXi ? mean_phi - 0.5 : 0.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto below = std::upper_bound(x.begin(), x.end(), grid[j]) -
                         x.begin();
      const double fn = static_cast<double>(below) / static_cast<double>(n);
      paths(static_cast<Eigen::Index>(r), j) =
          root_n * (fn - norm_cdf(grid[j]) + centering);
    }
  });

  // Per-group first and second moment sums, combined in fixed group order.
  const std::size_t groups = std::min(kJackknifeGroups, replicates);
  std::vector<Eigen::VectorXd> sum(groups, Eigen::VectorXd::Zero(k));
  std::vector<Eigen::MatrixXd> cross(groups, Eigen::MatrixXd::Zero(k, k));
  std::vector<double> count(groups, 0.0);
  for (Eigen::Index r = 0; r < reps; ++r) {
    const std::size_t gi = static_cast<std::size_t>(r) * groups / replicates;
    const Eigen::VectorXd row = paths.row(r).transpose();
    sum[gi] += row;
    cross[gi] += row * row.transpose();
    count[gi] += 1.0;
  }
  Eigen::VectorXd total_sum = Eigen::VectorXd::Zero(k);
  Eigen::MatrixXd total_cross = Eigen::MatrixXd::Zero(k, k);
  for (std::size_t gi = 0; gi < groups; ++gi) {
    total_sum += sum[gi];
    total_cross += cross[gi];
  }
  auto covariance = [](const Eigen::VectorXd& s, const Eigen::MatrixXd& c,
                       double m) {
    const Eigen::VectorXd mean = s / m;
    return Eigen::MatrixXd((c - m * mean * mean.transpose()) / (m - 1.0));
  };

  CovarianceEstimate est;
  est.grid = grid;
  est.process = process;
  est.replicates = replicates;
  est.n = n;
  est.empirical_cov =
      covariance(total_sum, total_cross, static_cast<double>(replicates));

  std::vector<Eigen::MatrixXd> leave_out;
  leave_out.reserve(groups);
  Eigen::MatrixXd mean_leave = Eigen::MatrixXd::Zero(k, k);
  for (std::size_t gi = 0; gi < groups; ++gi) {
    leave_out.push_back(covariance(total_sum - sum[gi],
                                   total_cross - cross[gi],
                                   static_cast<double>(replicates) -
                                       count[gi]));
    mean_leave += leave_out.back();
  }
  mean_leave /= static_cast<double>(groups);
  Eigen::MatrixXd var = Eigen::MatrixXd::Zero(k, k);
  for (const auto& c : leave_out) {
    var += (c - mean_leave).cwiseAbs2();
  }
  const double g = static_cast<double>(groups);
  est.se = ((g - 1.0) / g * var).cwiseSqrt();
  return est;
}

BLimitCheck validate_b_limit(EdfTest test, const FamilyPtr& family,
                             double theta, std::size_t n, std::uint64_t seed) {
  if (n < 100000) throw DomainError("validate_b_limit: need n >= 1e5");
  const std::vector<double> x = sample(*family, theta, n, seed);
  BLimitCheck check;
  check.observed = raw_statistics(fitted_tails(x, mle(x))).get(test);
  check.predicted = b_limit(test, family, theta);
  const double diff = std::abs(check.observed - check.predicted);
  check.rel_err =
      check.predicted == 0.0 ? diff : diff / std::abs(check.predicted);
  return check;
}

std::vector<double> null_distribution(EdfTest test, std::size_t n,
                                      std::size_t replicates,
                                      std::uint64_t seed, unsigned threads) {
  if (replicates < 10000) {
    throw DomainError("null_distribution: need replicates >= 1e4");
  }
  std::vector<double> values =
      null_replicates(test, n, replicates, seed, {}, threads);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace edfnorm

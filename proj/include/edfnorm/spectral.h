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

// Nystrom discretization of the covariance operators
//   (Wq)(x) = int K_eta(x,y) q(y) phi(y) dy,
//   (Aq)(x) = int K_eta(x,y) / sqrt(Phi(1-Phi)(x) Phi(1-Phi)(y)) q(y) phi(y) dy,
//   (Uq)(x) = int K_xi(x,y) q(y) phi(y) dy,
// and extraction of their largest eigenvalues.
//
// The operators are recast on u = Phi(x) in (0,1), where the Gaussian weight
// disappears and the Anderson-Darling weight becomes 1/sqrt(u(1-u)v(1-v)).
// With Gauss-Legendre nodes u_i and weights w_i on (0,1), the matrix
//   M_ij = sqrt(w_i w_j) K(Phi^-1(u_i), Phi^-1(u_j)) [/ AD weight]
// is symmetric and shares its spectrum with the collocation matrix K_ij w_j.

#ifndef EDFNORM_SPECTRAL_H_
#define EDFNORM_SPECTRAL_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "edfnorm/kernels.h"

namespace edfnorm {

enum class Operator { kW, kA, kU };

std::string_view to_string(Operator op);

// Kernel and weighting an operator is built from.
KernelSpec operator_kernel(Operator op);

struct DiscretizationConfig {
  std::size_t nodes = 1024;
  double eig_tol = 1e-12;
  std::size_t max_iter = 100000;
  // Replaces the operator's own kernel, keeping its weighting. Setting
  // kBrownianBridge gives the simple-hypothesis validation operators whose
  // spectra are known in closed form.
  std::optional<KernelKind> kernel_override;

  // Throws DomainError for nodes < 16, eig_tol <= 0 or max_iter == 0.
  void validate() const;
};

// Probit-transformed nodes: u_i in (0,1), x_i = Phi^-1(u_i), and weights.
struct ProbitGrid {
  std::vector<double> u;
  std::vector<double> x;
  std::vector<double> w;
};

ProbitGrid probit_grid(std::size_t nodes);

Eigen::MatrixXd build_operator_matrix(Operator op,
                                      const DiscretizationConfig& config);

// Top-k eigenvalues of a symmetric positive semidefinite matrix by power
// iteration with Hotelling deflation, sorted descending. Each eigenpair is
// accepted once the Rayleigh quotient changes by at most tol (relative) and
// the residual ||Mv - rho v|| is at most sqrt(tol) ||M||. Throws
// ConvergenceError carrying the last Rayleigh quotient and residual.
std::vector<double> largest_eigenvalues(const Eigen::MatrixXd& matrix,
                                        std::size_t k, double tol,
                                        std::size_t max_iter);

inline constexpr double kMaxRefinementDelta = 1e-4;

struct SpectralResult {
  Operator op = Operator::kW;
  std::vector<double> leading_eigenvalues;  // descending, from the fine grid
  DiscretizationConfig config;              // nodes = the fine grid
  double coarse_leading = 0.0;              // lambda_1 at config.nodes / 2
  double refinement_delta = 0.0;            // |fine - coarse| / fine
};

// Builds the operator at m and 2m nodes and returns the 2m result. Throws
// ConvergenceError if the relative change of lambda_1 is >= 1e-4.
SpectralResult leading_eigenvalue(Operator op,
                                  const DiscretizationConfig& config = {},
                                  std::size_t count = 1);

}  // namespace edfnorm

#endif  // EDFNORM_SPECTRAL_H_

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

#include "edfnorm/spectral.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>

#include "edfnorm/errors.h"

namespace edfnorm {

std::string_view to_string(Operator op) {
  switch (op) {
    case Operator::kW:
      return "W";
    case Operator::kA:
      return "A";
    case Operator::kU:
      return "U";
  }
  return "?";
}

KernelSpec operator_kernel(Operator op) {
  switch (op) {
    case Operator::kW:
      return {KernelKind::kEta, Weighting::kNone};
    case Operator::kA:
      return {KernelKind::kEta, Weighting::kAndersonDarling};
    case Operator::kU:
      return {KernelKind::kXi, Weighting::kNone};
  }
  return {};
}

void DiscretizationConfig::validate() const {
  if (nodes < 16) throw DomainError("spectral: need at least 16 nodes");
  if (!(eig_tol > 0.0)) throw DomainError("spectral: eig_tol must be > 0");
  if (max_iter == 0) throw DomainError("spectral: max_iter must be > 0");
}

ProbitGrid probit_grid(std::size_t nodes) {
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, 1.0);
  ProbitGrid grid{rule.nodes, std::vector<double>(nodes), rule.weights};
  // Gauss-Legendre nodes are symmetric about 1/2; take the quantile of the
  // lower node and mirror it so the upper half keeps full tail accuracy.
  for (std::size_t i = 0; i < (nodes + 1) / 2; ++i) {
    const double x = norm_quantile(grid.u[i]);
    grid.x[i] = x;
    grid.x[nodes - 1 - i] = -x;
  }
  if (nodes % 2 == 1) grid.x[nodes / 2] = 0.0;
  return grid;
}

Eigen::MatrixXd build_operator_matrix(Operator op,
                                      const DiscretizationConfig& config) {
  config.validate();
  KernelSpec kernel = operator_kernel(op);
  if (config.kernel_override) kernel.kind = *config.kernel_override;
  const bool weighted = kernel.weighting == Weighting::kAndersonDarling;
  kernel.weighting = Weighting::kNone;

  const ProbitGrid grid = probit_grid(config.nodes);
  const auto m = static_cast<Eigen::Index>(config.nodes);
  // Row scale: sqrt(w_i), divided by sqrt(u_i (1 - u_i)) for the
  // Anderson-Darling operator. In u-coordinates Phi(x_i) = u_i exactly.
  Eigen::VectorXd scale(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double u = grid.u[i];
    double s = std::sqrt(grid.w[i]);
    if (weighted) s /= std::sqrt(u * (1.0 - u));
    scale[i] = s;
  }

  Eigen::MatrixXd matrix(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = scale[i] * scale[j] * kernel(grid.x[i], grid.x[j]);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "build_operator_matrix: operator " << to_string(op)
            << " is not finite at node u = " << grid.u[i]
            << " (x = " << grid.x[i] << ")";
        throw EvaluationError(msg.str(), grid.x[i]);
      }
      matrix(i, j) = v;
      matrix(j, i) = v;
    }
  }
  return matrix;
}

namespace {

// Deterministic start vector with components along every eigenvector in
// practice.
Eigen::VectorXd start_vector(Eigen::Index n) {
  Eigen::VectorXd v(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (Eigen::Index i = 0; i < n; ++i) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    v[i] = 0.5 + static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  return v.normalized();
}

}  // namespace

std::vector<double> largest_eigenvalues(const Eigen::MatrixXd& matrix,
                                        std::size_t k, double tol,
                                        std::size_t max_iter) {
  if (k == 0) throw DomainError("largest_eigenvalues: k must be >= 1");
  if (matrix.rows() != matrix.cols()) {
    throw DomainError("largest_eigenvalues: matrix must be square");
  }
  const Eigen::Index n = matrix.rows();
  if (static_cast<Eigen::Index>(k) > n) {
    throw DomainError("largest_eigenvalues: k exceeds the matrix order");
  }
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw DomainError("largest_eigenvalues: matrix is not symmetric");
  }

  Eigen::MatrixXd work = matrix;
  const double norm_scale = std::max(matrix.cwiseAbs().maxCoeff(), 1e-300);
  std::vector<double> values;
  values.reserve(k);

  for (std::size_t found = 0; found < k; ++found) {
    Eigen::VectorXd v = start_vector(n);
    Eigen::VectorXd mv = work * v;
    double rho = v.dot(mv);
    double residual = (mv - rho * v).norm();
    bool converged = false;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
      const double len = mv.norm();
      if (len == 0.0) {
        // Remaining spectrum is numerically zero.
        rho = 0.0;
        residual = 0.0;
        converged = true;
        break;
      }
      v = mv / len;
      mv.noalias() = work * v;
      const double next = v.dot(mv);
      residual = (mv - next * v).norm();
      const double change = std::abs(next - rho);
      rho = next;
      if (change <= tol * std::abs(rho) &&
          residual <= std::sqrt(tol) * norm_scale) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "largest_eigenvalues: no convergence for eigenvalue "
          << found + 1 << " after " << max_iter
          << " iterations (rayleigh quotient " << rho << ", residual "
          << residual << ")";
      throw ConvergenceError(msg.str(), rho, residual);
    }
    values.push_back(rho);
    work.noalias() -= rho * v * v.transpose();
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

SpectralResult leading_eigenvalue(Operator op,
                                  const DiscretizationConfig& config,
                                  std::size_t count) {
  config.validate();
  DiscretizationConfig fine = config;
  fine.nodes = 2 * config.nodes;

  const auto coarse = largest_eigenvalues(build_operator_matrix(op, config), 1,
                                          config.eig_tol, config.max_iter);
  SpectralResult result;
  result.op = op;
  result.config = fine;
  result.leading_eigenvalues =
      largest_eigenvalues(build_operator_matrix(op, fine), count, fine.eig_tol,
                          fine.max_iter);
  result.coarse_leading = coarse.front();
  const double lead = result.leading_eigenvalues.front();
  result.refinement_delta = std::abs(lead - result.coarse_leading) / lead;
  if (!(result.refinement_delta < kMaxRefinementDelta)) {
    std::ostringstream msg;
    msg << "leading_eigenvalue: operator " << to_string(op)
        << " changed by a relative " << result.refinement_delta
        << " between " << config.nodes << " and " << fine.nodes
        << " nodes; increase the node count";
    throw ConvergenceError(msg.str(), lead, result.refinement_delta);
  }
  return result;
}

}  // namespace edfnorm

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

// Special functions of the standard normal law, Gauss-Legendre quadrature
// and a one-dimensional extremum search.

#ifndef EDFNORM_NUMERICS_H_
#define EDFNORM_NUMERICS_H_

#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace edfnorm {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;

// Standard normal density.
double norm_pdf(double x);

// Standard normal distribution function Phi(x).
double norm_cdf(double x);

// Upper tail 1 - Phi(x), computed without cancellation.
double norm_sf(double x);

// Inverse of Phi. Throws DomainError unless 0 < p < 1.
double norm_quantile(double p);

// A fixed set of nodes and positive weights on [lo, hi].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = 0.0;
  double hi = 0.0;

  std::size_t size() const { return nodes.size(); }
};

// n-point Gauss-Legendre rule mapped to [lo, hi].
QuadratureRule gauss_legendre(std::size_t n, double lo, double hi);

// Equal-width panels on [lo, hi], each carrying an n-point Gauss-Legendre
// rule.
QuadratureRule composite_gauss_legendre(double lo, double hi,
                                        std::size_t panels,
                                        std::size_t nodes_per_panel);

inline constexpr double kDomainLo = -10.0;
inline constexpr double kDomainHi = 10.0;

// 40 panels of width 0.5 on [-10, 10], 256 nodes each. Built once.
const QuadratureRule& default_rule();

using RealFunction = std::function<double(double)>;

// Sum of w_i f(x_i). Throws EvaluationError naming the first node where f is
// not finite.
double integrate_gauss(const RealFunction& f, const QuadratureRule& rule);
double integrate_gauss(const RealFunction& f);

struct Extremum {
  double argmax = 0.0;
  double value = 0.0;
};

inline constexpr std::size_t kDefaultScanGrid = 4001;

// Maximizes |f| on [lo, hi]: scans `grid` equispaced points, then refines
// with golden-section search on the bracket around the best scan point.
// Ties go to the smaller abscissa. The returned value is never below the
// best scanned value.
Extremum maximize_abs(const RealFunction& f, double lo, double hi,
                      std::size_t grid = kDefaultScanGrid);

}  // namespace edfnorm

#endif  // EDFNORM_NUMERICS_H_

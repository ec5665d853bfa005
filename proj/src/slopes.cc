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

#include "edfnorm/slopes.h"

#include <cmath>
#include <string>

#include "edfnorm/errors.h"
#include "edfnorm/kernels.h"

namespace edfnorm {
namespace {

double require(const std::optional<SpectralResult>& result, EdfTest test,
               const char* what) {
  if (!result) {
    throw MissingInputError(std::string("slope for ") +
                            std::string(to_string(test)) + " needs " + what);
  }
  return result->leading_eigenvalues.front();
}

double require(const std::optional<Extremum>& sup, EdfTest test,
               const char* what) {
  if (!sup) {
    throw MissingInputError(std::string("slope for ") +
                            std::string(to_string(test)) + " needs " + what);
  }
  return sup->value;
}

}  // namespace

SlopeContext compute_slope_context(const DiscretizationConfig& config) {
  SlopeContext context;
  context.w = leading_eigenvalue(Operator::kW, config);
  context.a = leading_eigenvalue(Operator::kA, config);
  context.u = leading_eigenvalue(Operator::kU, config);
  context.eta_diagonal = diagonal_sup({KernelKind::kEta, Weighting::kNone});
  context.xi_diagonal = diagonal_sup({KernelKind::kXi, Weighting::kNone});
  return context;
}

DriftSummary summarize_drift(const FamilyPtr& family,
                             const QuadratureRule& rule) {
  const RealFunction s = g_star(family, local_derivatives(*family, rule));
  DriftSummary d;
  d.sup = maximize_abs(s, rule.lo, rule.hi);
  d.mean =
      integrate_gauss([&](double x) { return s(x) * norm_pdf(x); }, rule);
  const double mean = d.mean;
  d.centered_sup = maximize_abs([&](double x) { return s(x) - mean; },
                                rule.lo, rule.hi);
  d.l2 = integrate_gauss([&](double x) {
    const double v = s(x);
    return v * v * norm_pdf(x);
  }, rule);
  d.ad_l2 = integrate_gauss([&](double x) {
    const double v = s(x);
    const double pdf = norm_pdf(x);
    if (pdf == 0.0) return 0.0;
    return v * v * pdf / (norm_cdf(x) * norm_sf(x));
  }, rule);
  d.centered_l2 = integrate_gauss([&](double x) {
    const double v = s(x) - mean;
    return v * v * norm_pdf(x);
  }, rule);
  return d;
}

double b_coefficient(EdfTest test, const DriftSummary& drift) {
  switch (test) {
    case EdfTest::kD:
      return drift.sup.value;
    case EdfTest::kW2:
      return drift.l2;
    case EdfTest::kA2:
      return drift.ad_l2;
    case EdfTest::kG:
      return drift.centered_sup.value;
    case EdfTest::kU2:
      return drift.centered_l2;
  }
  return 0.0;
}

double tail_constant(EdfTest test, const SlopeContext& context) {
  switch (test) {
    case EdfTest::kD:
      return 1.0 / require(context.eta_diagonal, test, "sup K_eta(x,x)");
    case EdfTest::kW2:
      return 1.0 / require(context.w, test, "lambda_1 of W");
    case EdfTest::kA2:
      return 1.0 / require(context.a, test, "nu_1 of A");
    case EdfTest::kG:
      return 1.0 / require(context.xi_diagonal, test, "sup K_xi(x,x)");
    case EdfTest::kU2:
      return 1.0 / require(context.u, test, "zeta_1 of U");
  }
  return 0.0;
}

double slope_coefficient(EdfTest test, const DriftSummary& drift,
                         const SlopeContext& context) {
  const double b = b_coefficient(test, drift);
  // The quadratic forms are already squared limits.
  const double b_squared = is_sup_test(test) ? b * b : b;
  return tail_constant(test, context) * b_squared;
}

double slope_coefficient(EdfTest test, const FamilyPtr& family,
                         const SlopeContext& context) {
  return slope_coefficient(test, summarize_drift(family), context);
}

double b_limit(EdfTest test, const FamilyPtr& family, double theta,
               const QuadratureRule& rule) {
  if (theta == 0.0) return 0.0;
  const double coef = b_coefficient(test, summarize_drift(family, rule));
  return is_sup_test(test) ? coef * std::abs(theta) : coef * theta * theta;
}

SlopeReport slope_report(const FamilyPtr& family, std::span<const EdfTest> tests,
                         const SlopeContext& context,
                         const QuadratureRule& rule) {
  SlopeReport report;
  report.family = family->name();
  report.label = family->label();
  report.k_lrt = lrt_slope_coefficient(*family, rule);
  const DriftSummary drift = summarize_drift(family, rule);
  for (EdfTest test : tests) {
    const double k = slope_coefficient(test, drift, context);
    report.per_test[test] = k;
    report.efficiency[test] = k / report.k_lrt;
  }
  return report;
}

std::vector<SlopeReport> efficiency_table(std::span<const FamilyPtr> families,
                                          std::span<const EdfTest> tests,
                                          const SlopeContext& context,
                                          const QuadratureRule& rule) {
  std::vector<SlopeReport> table;
  table.reserve(families.size());
  for (const auto& family : families) {
    table.push_back(slope_report(family, tests, context, rule));
  }
  return table;
}

}  // namespace edfnorm

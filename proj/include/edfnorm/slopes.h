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

// Local approximate Bahadur slopes of the EDF normality tests and their
// efficiencies relative to the likelihood-ratio test.
//
// For an alternative g(x; theta) each statistic T_n satisfies
// T_n/sqrt(n) -> b_T(theta) under the alternative and has a limiting null
// tail log(1 - F(t)) ~ -a_T t^2 / 2. The approximate slope is
// c_T = a_T b_T^2 = k_T theta^2 + o(theta^2). With s = g* and
// mbar = int s phi:
//
//   k_D  = (sup|s|)^2        / sup_x K_eta(x,x)
//   k_W2 = int s^2 phi       / lambda_1(W)
//   k_A2 = int s^2 phi / (Phi(1-Phi)) / nu_1(A)
//   k_G  = (sup|s - mbar|)^2 / sup_x K_xi(x,x)
//   k_U2 = int (s - mbar)^2 phi / zeta_1(U)
//
// For the integral statistics, b is taken for sqrt(omega^2) etc., so the
// quadratic-form limit enters k_T to the first power.

#ifndef EDFNORM_SLOPES_H_
#define EDFNORM_SLOPES_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edfnorm/alternatives.h"
#include "edfnorm/numerics.h"
#include "edfnorm/spectral.h"
#include "edfnorm/test_kind.h"

namespace edfnorm {

// Null-side constants shared by every family. Missing entries make the
// dependent tests throw MissingInputError.
struct SlopeContext {
  std::optional<SpectralResult> w;  // lambda_1
  std::optional<SpectralResult> a;  // nu_1
  std::optional<SpectralResult> u;  // zeta_1
  std::optional<Extremum> eta_diagonal;
  std::optional<Extremum> xi_diagonal;
};

SlopeContext compute_slope_context(const DiscretizationConfig& config = {});

// Family-side functionals of g*.
struct DriftSummary {
  Extremum sup;           // sup |g*|
  Extremum centered_sup;  // sup |g* - mbar|
  double mean = 0.0;      // mbar = int g* phi
  double l2 = 0.0;        // int g*^2 phi
  double ad_l2 = 0.0;     // int g*^2 phi / (Phi (1 - Phi))
  double centered_l2 = 0.0;  // int (g* - mbar)^2 phi
};

DriftSummary summarize_drift(const FamilyPtr& family,
                             const QuadratureRule& rule = default_rule());

// Coefficient of the first-order limit in probability of the unscaled
// statistic: b = coef * theta for D and G, b = coef * theta^2 for W2, A2
// and U2.
double b_coefficient(EdfTest test, const DriftSummary& drift);

// Tail constant a_T of the rescaled statistic: 1/sup diag for D, G and
// 1/lambda_1 for the quadratic forms.
double tail_constant(EdfTest test, const SlopeContext& context);

double slope_coefficient(EdfTest test, const DriftSummary& drift,
                         const SlopeContext& context);
double slope_coefficient(EdfTest test, const FamilyPtr& family,
                         const SlopeContext& context);

double b_limit(EdfTest test, const FamilyPtr& family, double theta,
               const QuadratureRule& rule = default_rule());

struct SlopeReport {
  std::string family;  // identifier
  std::string label;
  std::map<EdfTest, double> per_test;  // k_T
  double k_lrt = 0.0;
  std::map<EdfTest, double> efficiency;  // k_T / k_lrt
};

SlopeReport slope_report(const FamilyPtr& family, std::span<const EdfTest> tests,
                         const SlopeContext& context,
                         const QuadratureRule& rule = default_rule());

std::vector<SlopeReport> efficiency_table(std::span<const FamilyPtr> families,
                                          std::span<const EdfTest> tests,
                                          const SlopeContext& context,
                                          const QuadratureRule& rule =
                                              default_rule());

}  // namespace edfnorm

#endif  // EDFNORM_SLOPES_H_

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

#include "edfnorm/alternatives.h"

#include <cmath>
#include <charconv>
#include <numbers>
#include <sstream>

#include "edfnorm/errors.h"

namespace edfnorm {
namespace {

constexpr double kPi = std::numbers::pi;

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

[[noreturn]] void bad_theta(std::string_view family, double theta,
                            std::string_view range) {
  std::ostringstream msg;
  msg << family << ": theta = " << theta << " outside the valid range "
      << range;
  throw DomainError(msg.str());
}

class Lehmann final : public AlternativeFamily {
 public:
  std::string name() const override { return "lehmann"; }
  std::string label() const override { return "Lehmann"; }

  double density(double x, double theta) const override {
    return (1.0 + theta) * std::pow(norm_cdf(x), theta) * norm_pdf(x);
  }
  double cdf(double x, double theta) const override {
    return std::pow(norm_cdf(x), 1.0 + theta);
  }
  double density_theta_deriv_at_0(double x) const override {
    const double p = norm_cdf(x);
    if (p == 0.0) return 0.0;
    return norm_pdf(x) * (1.0 + std::log(p));
  }
  double cdf_theta_deriv_at_0(double x) const override {
    const double p = norm_cdf(x);
    if (p == 0.0) return 0.0;
    return p * std::log(p);
  }
  void check_theta(double theta) const override {
    if (!(theta > -1.0)) bad_theta(name(), theta, "theta > -1");
  }
  double draw(double theta, RandomStream& rng) const override {
    return norm_quantile(std::pow(rng.uniform(), 1.0 / (1.0 + theta)));
  }
};

class LeyPaindaveine1 final : public AlternativeFamily {
 public:
  std::string name() const override { return "lp1"; }
  std::string label() const override { return "1st Ley-Paindaveine"; }

  double density(double x, double theta) const override {
    const double p = norm_cdf(x);
    return norm_pdf(x) * ratio(p, theta);
  }
  // d/du [u exp(-theta (1 - u))] = exp(-theta (1 - u)) (1 + theta u).
  double cdf(double x, double theta) const override {
    const double p = norm_cdf(x);
    return p * std::exp(-theta * norm_sf(x));
  }
  double density_theta_deriv_at_0(double x) const override {
    return norm_pdf(x) * (2.0 * norm_cdf(x) - 1.0);
  }
  double cdf_theta_deriv_at_0(double x) const override {
    return -norm_cdf(x) * norm_sf(x);
  }
  void check_theta(double theta) const override {
    if (!(theta >= 0.0)) bad_theta(name(), theta, "theta >= 0");
  }
  // Rejection from phi; g/phi is increasing in Phi(x) and reaches 1 + theta.
  double draw(double theta, RandomStream& rng) const override {
    const double envelope = 1.0 + theta;
    for (;;) {
      const double z = rng.normal();
      if (rng.uniform() * envelope <= ratio(norm_cdf(z), theta)) return z;
    }
  }

 private:
  static double ratio(double p, double theta) {
    return std::exp(-theta * (1.0 - p)) * (1.0 + theta * p);
  }
};

class LeyPaindaveine2 final : public AlternativeFamily {
 public:
  std::string name() const override { return "lp2"; }
  std::string label() const override { return "2nd Ley-Paindaveine"; }

  double density(double x, double theta) const override {
    return norm_pdf(x) * ratio(norm_cdf(x), theta);
  }
  double cdf(double x, double theta) const override {
    const double p = norm_cdf(x);
    return p - theta * std::sin(kPi * p);
  }
  double density_theta_deriv_at_0(double x) const override {
    return -kPi * norm_pdf(x) * std::cos(kPi * norm_cdf(x));
  }
  double cdf_theta_deriv_at_0(double x) const override {
    return -std::sin(kPi * norm_cdf(x));
  }
  void check_theta(double theta) const override {
    if (!(std::abs(theta) <= std::numbers::inv_pi)) {
      bad_theta(name(), theta, "|theta| <= 1/pi");
    }
  }
  double draw(double theta, RandomStream& rng) const override {
    const double envelope = 1.0 + std::abs(theta) * kPi;
    for (;;) {
      const double z = rng.normal();
      if (rng.uniform() * envelope <= ratio(norm_cdf(z), theta)) return z;
    }
  }

 private:
  static double ratio(double p, double theta) {
    return 1.0 - theta * kPi * std::cos(kPi * p);
  }
};

class Contamination final : public AlternativeFamily {
 public:
  Contamination(double mu, double sigma2)
      : mu_(mu), sigma2_(sigma2), sigma_(std::sqrt(sigma2)) {}

  std::string name() const override {
    return "contam:" + format_number(mu_) + ":" + format_number(sigma2_);
  }
  std::string label() const override {
    return "Contamination with N(" + format_number(mu_) + "," +
           format_number(sigma2_) + ")";
  }

  double density(double x, double theta) const override {
    return (1.0 - theta) * norm_pdf(x) + theta * component_pdf(x);
  }
  double cdf(double x, double theta) const override {
    return (1.0 - theta) * norm_cdf(x) + theta * norm_cdf((x - mu_) / sigma_);
  }
  double density_theta_deriv_at_0(double x) const override {
    return component_pdf(x) - norm_pdf(x);
  }
  double cdf_theta_deriv_at_0(double x) const override {
    return norm_cdf((x - mu_) / sigma_) - norm_cdf(x);
  }
  void check_theta(double theta) const override {
    if (!(theta >= 0.0 && theta <= 1.0)) {
      bad_theta(name(), theta, "0 <= theta <= 1");
    }
  }
  double draw(double theta, RandomStream& rng) const override {
    const bool contaminated = rng.uniform() < theta;
    const double z = rng.normal();
    return contaminated ? mu_ + sigma_ * z : z;
  }

 private:
  double component_pdf(double x) const {
    return norm_pdf((x - mu_) / sigma_) / sigma_;
  }

  double mu_;
  double sigma2_;
  double sigma_;
};

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError("parse_family: bad number '" + std::string(text) +
                      "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FamilyPtr lehmann_family() { return std::make_shared<Lehmann>(); }
FamilyPtr ley_paindaveine_1_family() {
  return std::make_shared<LeyPaindaveine1>();
}
FamilyPtr ley_paindaveine_2_family() {
  return std::make_shared<LeyPaindaveine2>();
}

FamilyPtr contamination_family(double mu, double sigma2) {
  if (!std::isfinite(mu) || !(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    std::ostringstream msg;
    msg << "contamination: need finite mu and sigma2 > 0, got mu = " << mu
        << ", sigma2 = " << sigma2;
    throw DomainError(msg.str());
  }
  return std::make_shared<Contamination>(mu, sigma2);
}

FamilyPtr parse_family(std::string_view name) {
  if (name == "lehmann") return lehmann_family();
  if (name == "lp1" || name == "ley_paindaveine_1") {
    return ley_paindaveine_1_family();
  }
  if (name == "lp2" || name == "ley_paindaveine_2") {
    return ley_paindaveine_2_family();
  }
  for (std::string_view prefix : {"contam:", "contamination:"}) {
    if (name.starts_with(prefix)) {
      const std::string_view rest = name.substr(prefix.size());
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) break;
      return contamination_family(parse_number(rest.substr(0, colon), name),
                                  parse_number(rest.substr(colon + 1), name));
    }
  }
  throw DomainError("unknown alternative family '" + std::string(name) +
                    "' (expected lehmann, lp1, lp2 or contam:<mu>:<sigma2>)");
}

std::vector<FamilyPtr> reference_families() {
  return {lehmann_family(),
          ley_paindaveine_1_family(),
          ley_paindaveine_2_family(),
          contamination_family(1.0, 1.0),
          contamination_family(0.5, 1.0),
          contamination_family(0.0, 0.5)};
}

LocalDerivatives local_derivatives(const AlternativeFamily& family,
                                   const QuadratureRule& rule) {
  const double mu0 = family.null_mu();
  LocalDerivatives d;
  d.mu_prime = integrate_gauss(
      [&](double x) { return x * family.density_theta_deriv_at_0(x); }, rule);
  d.sigma2_prime = integrate_gauss(
      [&](double x) {
        return (x - mu0) * (x - mu0) * family.density_theta_deriv_at_0(x);
      },
      rule);
  d.sigma_prime = d.sigma2_prime / (2.0 * std::sqrt(family.null_sigma2()));
  return d;
}

RealFunction g_star(const FamilyPtr& family, const LocalDerivatives& local) {
  return [family, local](double x) {
    return family->cdf_theta_deriv_at_0(x) +
           family->density(x, 0.0) * (local.mu_prime + x * local.sigma_prime);
  };
}

RealFunction g_star(const FamilyPtr& family) {
  return g_star(family, local_derivatives(*family));
}

double lrt_slope_coefficient(const AlternativeFamily& family,
                             const QuadratureRule& rule) {
  const double s2 = family.null_sigma2();
  const double fisher = integrate_gauss(
      [&](double x) {
        const double g0 = family.density(x, 0.0);
        if (!(g0 > 0.0)) {
          std::ostringstream msg;
          msg << "lrt_slope_coefficient: null density of " << family.name()
              << " vanishes at x = " << x;
          throw EvaluationError(msg.str(), x);
        }
        const double d = family.density_theta_deriv_at_0(x);
        return d * d / g0;
      },
      rule);
  const LocalDerivatives local = local_derivatives(family, rule);
  return fisher - local.mu_prime * local.mu_prime / s2 -
         local.sigma2_prime * local.sigma2_prime / (2.0 * s2 * s2);
}

std::vector<double> sample(const AlternativeFamily& family, double theta,
                           std::size_t n, std::uint64_t seed) {
  family.check_theta(theta);
  RandomStream rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = family.draw(theta, rng);
  return out;
}

}  // namespace edfnorm

// Copyright 2026 The wreathgrowth Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builds prefixes of omega whose growth follows a prescribed profile, and
// the numeric bounds it relies on.

#ifndef WREATHGROWTH_OMEGA_BUILDER_H_
#define WREATHGROWTH_OMEGA_BUILDER_H_

#include <functional>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wreathgrowth/metrics.h"
#include "wreathgrowth/omega.h"

namespace wreathgrowth {
namespace metrics {

// A growth profile g in the log domain: G(rho) = log g(e^rho), G(0) = 0.
class GrowthProfile {
 public:
  using Fn = std::function<double(double)>;

  GrowthProfile(std::string name, Fn log_g)
      : name_(std::move(name)), fn_(std::move(log_g)) {}

  // g(R) = R^alpha.
  static GrowthProfile ExpPow(double alpha);
  // g(R) = R.
  static GrowthProfile Exp();
  // g(R) = R log c / log(R + c - 1).
  static GrowthProfile ExpOverLog(double c = std::exp(3.0));
  // g(R) = R loglog c / loglog(R + c - 1).
  static GrowthProfile ExpOverLogLog(double c = std::exp(std::exp(1.0)));
  // Piecewise linear through (rho, G) rows; first row must be (0, 0).
  // Extrapolated with the last slope.
  static GrowthProfile Tabulated(std::vector<std::pair<double, double>> rows);
  // Rows "log_R,log_g"; '#' comments and a non-numeric header are skipped.
  static GrowthProfile FromCsv(std::istream& in);
  // "exp", "exp_pow:alpha=<a>", "exp_over_log[:c=<c>]",
  // "exp_over_loglog[:c=<c>]", "table:<path>".
  static GrowthProfile Parse(const std::string& spec);

  double operator()(double rho) const { return fn_(rho); }
  const std::string& name() const { return name_; }

  struct Validation {
    bool ok = true;
    bool monotone = true;
    int grid_points = 0;
    std::vector<double> failing_rho;  // first few
    nlohmann::json ToJson() const;
  };
  // g(2R) <= 2 g(R) <= g(eta_+ R) and monotonicity on rho in
  // [0, 200 log eta_+].
  Validation Validate(int grid_points = 2001, double rel_tol = 1e-9) const;

 private:
  std::string name_;
  Fn fn_;
};

struct SyllableBoundary {
  long long k = 0;      // length after the syllable
  bool after_012 = false;
  double log_g = 0;     // G(L)
  double target = 0;    // k log 2
  double lo = 0, hi = 0;  // widened window
  bool ok = true;
};

struct OmegaBuildResult {
  std::string prefix;
  std::vector<SyllableBoundary> boundaries;
  long long letters_012 = 0;
  long long letters_2 = 0;
  double log_eta = 0;  // L after the whole prefix
  bool windows_ok = true;

  double Fraction012() const {
    return prefix.empty() ? 0.0
                          : static_cast<double>(letters_012) / prefix.size();
  }
  std::string Syllables() const { return SyllableNotation(prefix); }
  nlohmann::json ToJson() const;
};

// Throws DomainError listing failing grid points if the profile is invalid.
OmegaBuildResult OmegaBuild(const GrowthProfile& profile, long long k_max);

struct BlockEtaReport {
  int n_max = 0;
  int grid_points = 0;
  std::vector<double> lower;  // min over grid of eta(p, (012)^n) / eta_+^{3n}
  std::vector<double> upper;  // max over grid of eta(p, 2^n) / 2^n
  double a_prime = 1, b_prime = 1;
  nlohmann::json ToJson() const;
};

BlockEtaReport BlockEtaBounds(int n_max, int lattice = 16);

struct MuWindowReport {
  long long checked = 0;
  double min_mu = 1, max_mu = 0;
  long long first_violation = -1;
  bool pass = true;
  nlohmann::json ToJson() const;
};

// mu(p_k) in (lo, hi) for k = 0 and every k past the first complete 012,
// with p_0 = p_{012} and p_{k+1} = Mbar(p_k, omega_k).
MuWindowReport MuWindowCheck(const OmegaSeq& omega, long long k_max,
                             double lo = 0.2, double hi = 1.0 / 3);

}  // namespace metrics
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_OMEGA_BUILDER_H_

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

// The simplex of generator norms for G_omega: transition matrices, eta,
// mu, the Hilbert metric, fixed points p_omega, induced norms and the
// super-contraction check.

#ifndef WREATHGROWTH_METRICS_H_
#define WREATHGROWTH_METRICS_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "wreathgrowth/errors.h"
#include "wreathgrowth/omega.h"
#include "wreathgrowth/selfsim.h"
#include "wreathgrowth/series.h"

namespace wreathgrowth {
namespace metrics {

// (beta, gamma, delta) <-> (b, c, d) <-> lambda = 0, 1, 2.
template <typename T>
struct SimplexPoint {
  std::array<T, 3> x;

  const T& operator[](int i) const { return x[i]; }
  T& operator[](int i) { return x[i]; }
  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;
};

using Point = SimplexPoint<double>;
using ExactPoint = SimplexPoint<Rational>;

inline Point Barycenter() { return {{1.0 / 3, 1.0 / 3, 1.0 / 3}}; }
inline ExactPoint ExactBarycenter() {
  return {{Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
}
Point ToDouble(const ExactPoint& p);

// Open simplex: positive, sum 1, max < 1/2.
bool InSimplex(const Point& p, double tol = 1e-12);
bool InSimplex(const ExactPoint& p);

// M_lambda p.  Row lambda is (1 1 1), the other diagonal entries are 2.
template <typename T>
SimplexPoint<T> ApplyM(const SimplexPoint<T>& p, int lambda) {
  if (lambda < 0 || lambda > 2) throw DomainError("lambda must be 0, 1 or 2");
  SimplexPoint<T> r;
  for (int i = 0; i < 3; ++i) {
    r[i] = i == lambda ? T(p[0] + p[1] + p[2]) : T(2 * p[i]);
  }
  return r;
}

template <typename T>
T EtaUnchecked(const SimplexPoint<T>& p, int lambda) {
  const SimplexPoint<T> m = ApplyM(p, lambda);
  return m[0] + m[1] + m[2];
}

template <typename T>
void RequireSimplex(const SimplexPoint<T>& p) {
  if (!InSimplex(p)) throw DomainError("point outside the open simplex");
}

template <typename T>
T Eta(const SimplexPoint<T>& p, int lambda) {
  RequireSimplex(p);
  return EtaUnchecked(p, lambda);
}

template <typename T>
SimplexPoint<T> Mbar(const SimplexPoint<T>& p, int lambda) {
  RequireSimplex(p);
  SimplexPoint<T> m = ApplyM(p, lambda);
  const T eta = m[0] + m[1] + m[2];
  for (int i = 0; i < 3; ++i) m[i] = m[i] / eta;
  return m;
}

template <typename T>
T Mu(const SimplexPoint<T>& p) {
  RequireSimplex(p);
  return std::min(p[0], std::min(p[1], p[2]));
}

// A point stored through its gaps g_i = 1/2 - p_i to the sides.  Stays
// accurate along long runs of one letter, where p approaches a side.
struct GapPoint {
  std::array<double, 3> g;

  static GapPoint From(const Point& p) {
    return {{0.5 - p[0], 0.5 - p[1], 0.5 - p[2]}};
  }
  Point ToPoint() const { return {{0.5 - g[0], 0.5 - g[1], 0.5 - g[2]}}; }
  // Moves to Mbar(p, lambda) and returns log eta(p, lambda).
  double Step(int lambda) {
    const double gl = g[lambda];
    const double eta = 2 + 2 * gl;
    for (int i = 0; i < 3; ++i) {
      g[i] = i == lambda ? gl / eta : (gl + 2 * g[i]) / eta;
    }
    return std::log(2.0) + std::log1p(gl);
  }
  double Mu() const { return 0.5 - std::max(g[0], std::max(g[1], g[2])); }
};

// log of the cross-ratio (p, q; V-, V+) on the chord through p and q.
double HilbertDistance(const Point& p, const Point& q);

// Applies the letters of w in order: returns M_{w_{n-1}} ... M_{w_0} p
// normalised, and sets *log_eta to the sum of log eta along the way.
Point MbarWord(const Point& p, const std::string& w, double* log_eta = nullptr);

// p_omega for the negative part ...uuu (u = tail, last letter = omega_{-1}):
// fixed point of Mbar_{u_{m-1}} o ... o Mbar_{u_0}.
Point FixedPointTail(const std::string& tail, double tol = 1e-12,
                     const Point& seed = Barycenter(), int max_iter = 100000);

// Positive root of T^3 - T^2 - 2T - 4 and log 2 / log eta_+.
double EtaPlus();
double Alpha();
// Spectral radius of M_0 times the cyclic coordinate permutation.
double EtaPlusByPowerIteration(double tol = 1e-14);

struct NormAssignment {
  Point p;
  int lambda = 0;  // omega_0
  double a = 0, b = 0, c = 0, d = 0;
  double eta = 0;  // eta(p, lambda)
  double mu = 0;

  std::vector<double> Weights() const { return {a, b, c, d}; }
  nlohmann::json ToJson() const;
};

NormAssignment NormsFromPoint(const Point& p, int lambda = 0);

// Norm data for the shifts sigma^i omega, i < count, with the negative
// part fixed by neg_tail.
std::vector<NormAssignment> OmegaNorms(const OmegaSeq& omega, int count,
                                       const std::string& neg_tail = "012");

struct SupercontractViolation {
  std::string word;
  double norm = 0, lhs = 0, rhs = 0;
};

struct SupercontractReport {
  int max_letters = 0;
  int elements = 0;
  int violations = 0;
  int conjugate_failures = 0;  // strict form fails for every conjugate
  double worst_ratio = 0;      // max lhs / rhs
  double eta = 0;
  std::vector<SupercontractViolation> examples;
  nlohmann::json ToJson() const;
};

// For every g with a word of <= max_letters letters in G_omega:
// |g0| + |g1| <= (2 / eta)(|g| + |a|), section norms in G_{sigma omega}.
// Also checks that g outside {1, b, c, d} has a conjugate by a generator
// or itself satisfying the inequality without the |a| term.
SupercontractReport SupercontractCheck(const OmegaSeq& omega,
                                       selfsim::Preset preset, int max_letters,
                                       const std::string& neg_tail = "012");

struct UpperGRow {
  double r = 0;
  int64_t lhs = 0;  // v_omega(R + mu)
  int64_t rhs = 0;  // 2 #{(g0, g1): |g0| + |g1| <= (2/eta)(R + mu + |a|)}
};

struct UpperGReport {
  std::vector<UpperGRow> rows;
  bool pass = true;
  nlohmann::json ToJson() const;
};

// Recursion step v_omega(R + mu) <= sum_{R0 + R1 <= bound} 2 v(R0) v(R1),
// read as a count of section pairs, for R = 0, step, ..., r_max.
UpperGReport UpperGRecursionCheck(const OmegaSeq& omega, double r_max,
                                  double step = 1.0,
                                  const std::string& neg_tail = "012",
                                  int64_t budget = 10'000'000);

}  // namespace metrics
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_METRICS_H_

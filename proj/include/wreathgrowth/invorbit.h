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

// Inverted orbits of G_omega on the orbit of 1^inf, their growth Delta and
// choice growth Sigma, and the substitution witnesses.

#ifndef WREATHGROWTH_INVORBIT_H_
#define WREATHGROWTH_INVORBIT_H_

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "wreathgrowth/finite_group.h"
#include "wreathgrowth/omega.h"
#include "wreathgrowth/schreier.h"
#include "wreathgrowth/selfsim.h"

namespace wreathgrowth {
namespace invorbit {

using schreier::OrbitPoint;

// The ball of radius `radius` around xi in the orbit, with integer ids.
class OrbitTable {
 public:
  OrbitTable(const selfsim::GrigGroup& g, const OrbitPoint& xi, int radius);

  int radius() const { return radius_; }
  int size() const { return graph_.num_vertices(); }
  // Image of vertex v under generator x in "abcd"; -1 outside the table.
  int Act(int v, char x) const { return graph_.Target(v, x - 'a'); }
  const OrbitPoint& point(int v) const { return points_[v]; }

 private:
  int radius_;
  schreier::SchreierGraph graph_;
  std::vector<OrbitPoint> points_;
};

struct InvertedOrbit {
  std::string word;
  std::vector<OrbitPoint> points;  // sorted, distinct

  int size() const { return static_cast<int>(points.size()); }
  nlohmann::json ToJson() const;
};

// O(w) = { xi . w_{i+1} ... w_l : 0 <= i <= l } for the right action.
InvertedOrbit ComputeInvertedOrbit(const selfsim::GrigGroup& g,
                                   const std::string& w,
                                   const OrbitPoint& xi = schreier::Xi());

// Normal form in the monoid where b, c, d generate a Klein four-group and a
// is free: adjacent b, c, d letters are multiplied out, "aa" is kept.
// Inverted orbits of 1^inf only depend on this form.
std::string ReduceMonoid(const std::string& w);

struct DeltaSigmaTable {
  double radius = 0;
  bool weighted = false;
  int64_t words = 0;              // reduced words enumerated
  std::vector<int> delta;         // unweighted: Delta(r), r = 0..R
  std::vector<std::string> witness;
  std::vector<int64_t> sigma;     // unweighted: Sigma(r)
  int delta_max = 0;              // Delta(R)
  std::string witness_max;
  int64_t sigma_max = 0;          // Sigma(R)
  nlohmann::json ToJson() const;
};

struct EnumerationLimits {
  int max_unweighted_radius = 14;
  int64_t max_words = 20'000'000;
};

// Enumerates the ReduceMonoid-normal words of (weighted) length <= R.  Weights are for
// a, b, c, d; empty means all 1.
DeltaSigmaTable DeltaSigma(const selfsim::GrigGroup& g, double radius,
                           const std::vector<double>& weights = {},
                           const OrbitPoint& xi = schreier::Xi(),
                           const EnumerationLimits& limits = {});

// zeta_x on words over the syllables ab, ac, ad.
std::string ZetaApply(int x, const std::string& w);
// Numbers of ab, ac, ad syllables.
std::array<int64_t, 3> SyllableCounts(const std::string& w);

struct Witness {
  int k = 0;
  std::string syllable;  // "ab", "ac" or "ad"
  std::string word;
  int orbit_size = 0;
  double weighted_length = 0;
  double predicted = 0;  // eta_omega ... eta_{sigma^{k-1} omega} mu_{sigma^k omega}
  bool orbit_ok = false;
  bool length_ok = false;
  nlohmann::json ToJson(bool include_word = false) const;
};

// w = zeta_{omega_0} ... zeta_{omega_{k-1}}(as) with |as| minimal in the
// sigma^k omega norm, evaluated in G_omega (family recursion).
Witness WitnessWord(int k, const OmegaSeq& omega = OmegaSeq::Periodic("012"),
                    const std::string& neg_tail = "012");

struct GrowthWRow {
  int r = 0;
  int64_t v_g = 0, v_h = 0, v_w3 = 0, v_w = 0;
  int delta = 0;
  int64_t sigma = 0;
  // v_G(R) v_H(floor(R / Delta))^Delta <= v_W(3R)
  double lower_lhs = 0;
  // v_W(R) <= v_G(R) #H^Delta Sigma(R)
  double upper_rhs = 0;
  bool lower_ok = false, upper_ok = false;
};

struct GrowthWReport {
  std::vector<GrowthWRow> rows;
  bool pass = true;
  nlohmann::json ToJson() const;
};

// W = H wr_X G_012 with generators {a, b, c, d} u T@1^inf, for r = 0..R.
GrowthWReport GrowthWBoundsCheck(const FiniteGroup& h, int radius,
                                 int64_t budget = 20'000'000);

}  // namespace invorbit
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_INVORBIT_H_

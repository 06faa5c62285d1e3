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

// Permutational wreath products H wr_X G_omega over the orbit X of 1^inf.

#ifndef WREATHGROWTH_PERMWREATH_H_
#define WREATHGROWTH_PERMWREATH_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wreathgrowth/finite_group.h"
#include "wreathgrowth/growth.h"
#include "wreathgrowth/schreier.h"
#include "wreathgrowth/selfsim.h"

namespace wreathgrowth {
namespace permwreath {

// c g with c: X -> H finitely supported (keys are OrbitPoint words, no
// identity values) and g a reduced word of G_omega.
struct PwElement {
  std::map<std::string, int> decoration;
  std::string base;
};

// A decorated generator h@x.
struct Decorated {
  int h = 0;
  schreier::OrbitPoint x;
};

class PermWreathBackend {
 public:
  using Element = PwElement;

  PermWreathBackend(FiniteGroup h, const selfsim::GrigGroup& g,
                    std::vector<Decorated> decorated, bool include_grig = true);

  // {a, b, c, d} together with t@y for t in the generators of H, y in points.
  static PermWreathBackend Standard(FiniteGroup h, const selfsim::GrigGroup& g,
                                    const std::vector<schreier::OrbitPoint>&
                                        points = {schreier::Xi()},
                                    bool include_grig = true);

  Element Identity() const { return {}; }
  Element Multiply(const Element& u, const Element& v) const;
  Element Invert(const Element& u) const;
  std::string Key(const Element& u) const;
  const std::vector<growth::Generator<Element>>& generators() const {
    return gens_;
  }

  Element Lamp(int h, const schreier::OrbitPoint& x) const;
  Element Base(const std::string& w) const;
  bool IsIdentity(const Element& u) const;
  // Imprimitive action on H x X: (y, x) . c g = (y c(x), x g).
  std::pair<int, schreier::OrbitPoint> ActImprimitive(
      const Element& u, const std::pair<int, schreier::OrbitPoint>& p) const;

  const FiniteGroup& h() const { return h_; }
  const selfsim::GrigGroup& g() const { return g_; }

 private:
  FiniteGroup h_;
  const selfsim::GrigGroup& g_;
  std::vector<growth::Generator<Element>> gens_;
};

// Ball of W_omega(H) with the standard generators (lamps at 1^inf).
growth::BallRecord W012Ball(const FiniteGroup& h, int radius,
                            const OmegaSeq& omega = OmegaSeq::Periodic("012"),
                            int64_t budget = 10'000'000);

// x_i = 1^inf 0^i.
schreier::OrbitPoint NuegPoint(int i);

// (W, S_i) with S_i = {a, b, c, d} u s@x_0 u t@x_i, where s ranges over
// s_gens and t over t_gens (indices into H).
PermWreathBackend NuegBackend(const FiniteGroup& h, const selfsim::GrigGroup& g,
                              const std::vector<int>& s_gens,
                              const std::vector<int>& t_gens, int i);

struct CompareResult {
  bool equal = false;
  int64_t size_i = 0, size_j = 0;
};

// Radius-R Cayley balls of (W, S_i) and (W, S_j) as labelled rooted graphs.
CompareResult CompareBalls(const FiniteGroup& h, const std::vector<int>& s_gens,
                           const std::vector<int>& t_gens, int i, int j,
                           int radius, int64_t budget = 10'000'000);
// H = C5 x C5 with s, t the generators of the two factors.
CompareResult CompareBalls(int i, int j, int radius,
                           int64_t budget = 10'000'000);

}  // namespace permwreath
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_PERMWREATH_H_

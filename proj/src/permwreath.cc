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

#include "wreathgrowth/permwreath.h"

#include "wreathgrowth/errors.h"

namespace wreathgrowth {
namespace permwreath {

using schreier::ActOrbit;
using schreier::OrbitPoint;

PermWreathBackend::PermWreathBackend(FiniteGroup h,
                                     const selfsim::GrigGroup& g,
                                     std::vector<Decorated> decorated,
                                     bool include_grig)
    : h_(std::move(h)), g_(g) {
  if (include_grig) {
    for (const char* x : {"a", "b", "c", "d"}) gens_.push_back({x, Base(x), 1.0});
  }
  for (const Decorated& d : decorated) {
    if (d.h < 0 || d.h >= h_.order()) throw DomainError("H element out of range");
    gens_.push_back({h_.name(d.h) + "@" + d.x.ToString(), Lamp(d.h, d.x), 1.0});
  }
}

PermWreathBackend PermWreathBackend::Standard(
    FiniteGroup h, const selfsim::GrigGroup& g,
    const std::vector<OrbitPoint>& points, bool include_grig) {
  std::vector<Decorated> dec;
  for (int t : h.generators()) {
    for (const OrbitPoint& y : points) dec.push_back({t, y});
  }
  return PermWreathBackend(std::move(h), g, std::move(dec), include_grig);
}

PwElement PermWreathBackend::Lamp(int h, const OrbitPoint& x) const {
  PwElement e;
  if (h != h_.identity()) e.decoration[x.word] = h;
  return e;
}

PwElement PermWreathBackend::Base(const std::string& w) const {
  if (!selfsim::IsGrigWord(w)) throw ParseError("bad generator word: " + w);
  return {{}, selfsim::Reduce(w)};
}

PwElement PermWreathBackend::Multiply(const PwElement& u,
                                      const PwElement& v) const {
  PwElement r;
  r.decoration = u.decoration;
  const std::string inv = selfsim::InverseWord(u.base);
  for (const auto& [y, hv] : v.decoration) {
    // (u v)(x) = u(x) v(x . g_u), so v's value at y lands at y . g_u^-1.
    const std::string x = ActOrbit(g_, inv, OrbitPoint(y)).word;
    auto it = r.decoration.find(x);
    const int cur = it == r.decoration.end() ? h_.identity() : it->second;
    const int val = h_.mul(cur, hv);
    if (val == h_.identity()) {
      if (it != r.decoration.end()) r.decoration.erase(it);
    } else {
      r.decoration[x] = val;
    }
  }
  r.base = selfsim::Reduce(u.base + v.base);
  return r;
}

PwElement PermWreathBackend::Invert(const PwElement& u) const {
  PwElement r;
  for (const auto& [y, hv] : u.decoration) {
    r.decoration[ActOrbit(g_, u.base, OrbitPoint(y)).word] = h_.inv(hv);
  }
  r.base = selfsim::InverseWord(u.base);
  return r;
}

std::string PermWreathBackend::Key(const PwElement& u) const {
  std::string k;
  for (const auto& [y, hv] : u.decoration) {
    k += y;
    k += ':';
    k += std::to_string(hv);
    k += ';';
  }
  k += '|';
  k += g_.PortraitKey(u.base);
  return k;
}

bool PermWreathBackend::IsIdentity(const PwElement& u) const {
  return u.decoration.empty() && g_.IsTrivial(u.base);
}

std::pair<int, OrbitPoint> PermWreathBackend::ActImprimitive(
    const PwElement& u, const std::pair<int, OrbitPoint>& p) const {
  auto it = u.decoration.find(p.second.word);
  const int c = it == u.decoration.end() ? h_.identity() : it->second;
  return {h_.mul(p.first, c), ActOrbit(g_, u.base, p.second)};
}

growth::BallRecord W012Ball(const FiniteGroup& h, int radius,
                            const OmegaSeq& omega, int64_t budget) {
  selfsim::GrigGroup g(selfsim::Preset::kFamily, omega);
  const auto w = PermWreathBackend::Standard(h, g);
  growth::BallOptions opt;
  opt.budget = budget;
  return growth::EnumerateBall(w, radius, opt);
}

OrbitPoint NuegPoint(int i) {
  if (i < 0 || i > 62) throw DomainError("x_i needs 0 <= i <= 62");
  return OrbitPoint(std::string(i, '0'));
}

PermWreathBackend NuegBackend(const FiniteGroup& h, const selfsim::GrigGroup& g,
                              const std::vector<int>& s_gens,
                              const std::vector<int>& t_gens, int i) {
  std::vector<Decorated> dec;
  for (int s : s_gens) dec.push_back({s, NuegPoint(0)});
  for (int t : t_gens) dec.push_back({t, NuegPoint(i)});
  return PermWreathBackend(h, g, std::move(dec));
}

CompareResult CompareBalls(const FiniteGroup& h, const std::vector<int>& s_gens,
                           const std::vector<int>& t_gens, int i, int j,
                           int radius, int64_t budget) {
  selfsim::GrigGroup g(selfsim::Preset::kFamily);
  growth::BallOptions opt;
  opt.edges = true;
  opt.budget = budget;
  const auto bi = growth::EnumerateBall(NuegBackend(h, g, s_gens, t_gens, i),
                                        radius, opt);
  const auto bj = growth::EnumerateBall(NuegBackend(h, g, s_gens, t_gens, j),
                                        radius, opt);
  CompareResult r;
  r.size_i = bi.size();
  r.size_j = bj.size();
  r.equal = schreier::MarkedBallEqual(bi.Graph(), bj.Graph(), radius);
  return r;
}

CompareResult CompareBalls(int i, int j, int radius, int64_t budget) {
  const FiniteGroup h = FiniteGroup::Parse("C5xC5");
  const auto& gens = h.generators();  // s, s^-1, t, t^-1
  return CompareBalls(h, {gens[0], gens[1]}, {gens[2], gens[3]}, i, j, radius,
                      budget);
}

}  // namespace permwreath
}  // namespace wreathgrowth

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

#include "wreathgrowth/invorbit.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "wreathgrowth/backends.h"
#include "wreathgrowth/errors.h"
#include "wreathgrowth/growth.h"
#include "wreathgrowth/metrics.h"
#include "wreathgrowth/permwreath.h"

namespace wreathgrowth {
namespace invorbit {

OrbitTable::OrbitTable(const selfsim::GrigGroup& g, const OrbitPoint& xi,
                       int radius)
    : radius_(radius) {
  if (radius < 0) throw DomainError("radius must be >= 0");
  if (radius > 1'000'000) throw ResourceError("orbit table radius too large");
  schreier::GrigOrbitAction act(g);
  // A ball of radius r in a graph of degree <= 2 has at most 2r + 1 points.
  graph_ = schreier::BuildSchreier(act, xi, 2 * radius + 4, radius);
  for (const std::string& k : graph_.keys) points_.push_back(OrbitPoint(k));
}

nlohmann::json InvertedOrbit::ToJson() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const OrbitPoint& p : points) pts.push_back(p.ToString());
  return {{"word", word}, {"size", size()}, {"points", pts}};
}

InvertedOrbit ComputeInvertedOrbit(const selfsim::GrigGroup& g,
                                   const std::string& w,
                                   const OrbitPoint& xi) {
  if (!selfsim::IsGrigWord(w)) throw ParseError("bad generator word: " + w);
  const int n = static_cast<int>(w.size());
  OrbitTable table(g, xi, n);
  std::vector<char> seen(table.size(), 0);
  for (int i = 0; i <= n; ++i) {
    int v = 0;
    for (int j = i; j < n; ++j) v = table.Act(v, w[j]);
    if (v < 0) throw ContractViolation("orbit table too small");
    seen[v] = 1;
  }
  InvertedOrbit o;
  o.word = w;
  for (int v = 0; v < table.size(); ++v) {
    if (seen[v]) o.points.push_back(table.point(v));
  }
  std::sort(o.points.begin(), o.points.end());
  return o;
}

nlohmann::json DeltaSigmaTable::ToJson() const {
  nlohmann::json j = {{"radius", radius},         {"weighted", weighted},
                      {"words", words},           {"delta", delta_max},
                      {"witness", witness_max},   {"sigma", sigma_max}};
  if (!weighted) {
    j["delta_by_radius"] = delta;
    j["sigma_by_radius"] = sigma;
    j["witness_by_radius"] = witness;
  }
  return j;
}

namespace {

bool IsBcd(char x) { return x == 'b' || x == 'c' || x == 'd'; }

class DeltaSearch {
 public:
  DeltaSearch(const OrbitTable& table, std::vector<double> weights,
              double radius, int max_letters, const EnumerationLimits& limits)
      : table_(table),
        weights_(std::move(weights)),
        radius_(radius),
        max_letters_(max_letters),
        limits_(limits),
        n_(table.size()) {}

  void Run() {
    std::vector<int> f(n_);
    for (int v = 0; v < n_; ++v) f[v] = v;
    std::vector<uint64_t> bits((n_ + 63) / 64, 0);
    bits[0] |= 1;
    std::string rev;
    Visit(rev, 0.0, f, bits, 1);
  }

  struct Best {
    int size = 0;
    std::string word;
  };
  std::map<int, Best> by_length;            // unweighted: per word length
  std::unordered_map<std::string, double> sets;  // orbit set -> min length
  Best best;
  int64_t words = 0;

 private:
  void Visit(std::string& rev, double len, const std::vector<int>& f,
             const std::vector<uint64_t>& bits, int count) {
    if (++words > limits_.max_words) {
      throw ResourceError("word budget " + std::to_string(limits_.max_words) +
                          " exceeded");
    }
    std::string word(rev.rbegin(), rev.rend());
    Best& b = by_length[static_cast<int>(rev.size())];
    if (count > b.size || (count == b.size && word < b.word)) b = {count, word};
    if (count > best.size || (count == best.size && word < best.word)) {
      best = {count, word};
    }
    const std::string key(reinterpret_cast<const char*>(bits.data()),
                          bits.size() * sizeof(uint64_t));
    auto [it, fresh] = sets.emplace(key, len);
    if (!fresh) it->second = std::min(it->second, len);
    if (static_cast<int>(rev.size()) >= max_letters_) return;
    const char first = rev.empty() ? 0 : rev.back();
    for (char x : {'a', 'b', 'c', 'd'}) {
      if (first && IsBcd(x) && IsBcd(first)) continue;
      // O(u aaa v) = O(u a v).
      if (x == 'a' && rev.size() >= 2 && rev[rev.size() - 1] == 'a' &&
          rev[rev.size() - 2] == 'a') {
        continue;
      }
      const double nl = len + weights_[x - 'a'];
      if (nl > radius_ + 1e-9) continue;
      // f_{xw}(p) = f_w(p . x)
      std::vector<int> g(n_, -1);
      for (int v = 0; v < n_; ++v) {
        const int t = table_.Act(v, x);
        if (t >= 0) g[v] = f[t];
      }
      const int p = g[0];
      if (p < 0) throw ContractViolation("orbit table too small");
      std::vector<uint64_t> nb = bits;
      int nc = count;
      if (!(nb[p / 64] >> (p % 64) & 1)) {
        nb[p / 64] |= uint64_t{1} << (p % 64);
        ++nc;
      }
      rev.push_back(x);
      Visit(rev, nl, g, nb, nc);
      rev.pop_back();
    }
  }

  const OrbitTable& table_;
  std::vector<double> weights_;
  double radius_;
  int max_letters_;
  EnumerationLimits limits_;
  int n_;
};

}  // namespace

DeltaSigmaTable DeltaSigma(const selfsim::GrigGroup& g, double radius,
                           const std::vector<double>& weights,
                           const OrbitPoint& xi,
                           const EnumerationLimits& limits) {
  if (!(radius >= 0)) throw DomainError("radius must be >= 0");
  DeltaSigmaTable out;
  out.radius = radius;
  out.weighted = !weights.empty();
  std::vector<double> w = weights;
  int max_letters = 0;
  if (w.empty()) {
    if (radius > limits.max_unweighted_radius) {
      throw ResourceError("radius " + std::to_string(radius) +
                          " exceeds the enumeration bound " +
                          std::to_string(limits.max_unweighted_radius));
    }
    w.assign(4, 1.0);
    max_letters = static_cast<int>(std::floor(radius + 1e-9));
  } else {
    if (w.size() != 4) throw DomainError("need weights for a, b, c, d");
    for (double x : w) {
      if (!(x >= 0) || !std::isfinite(x)) {
        throw DomainError("weights must be finite and >= 0");
      }
    }
    const double pair = w[0] + std::min({w[1], w[2], w[3]});
    if (!(pair > 0)) throw DomainError("a + min(b, c, d) weight must be > 0");
    max_letters = 2 * static_cast<int>(std::floor(radius / pair + 1e-9)) + 1;
  }
  OrbitTable table(g, xi, max_letters);
  DeltaSearch search(table, w, radius, max_letters, limits);
  search.Run();
  out.words = search.words;
  out.delta_max = search.best.size;
  out.witness_max = search.best.word;
  out.sigma_max = static_cast<int64_t>(search.sets.size());
  if (!out.weighted) {
    int best = 0;
    std::string wit;
    for (int r = 0; r <= max_letters; ++r) {
      auto it = search.by_length.find(r);
      if (it != search.by_length.end() && it->second.size > best) {
        best = it->second.size;
        wit = it->second.word;
      }
      out.delta.push_back(best);
      out.witness.push_back(wit);
      int64_t s = 0;
      for (const auto& [k, len] : search.sets) s += len <= r + 1e-9;
      out.sigma.push_back(s);
    }
  }
  return out;
}

std::string ReduceMonoid(const std::string& w) {
  if (!selfsim::IsGrigWord(w)) throw ParseError("bad generator word: " + w);
  std::string out;
  for (char x : w) {
    if (x == '1') continue;
    if (IsBcd(x) && !out.empty() && IsBcd(out.back())) {
      const char y = out.back();
      out.pop_back();
      // Klein four-group on {1, b, c, d}.
      if (x != y) out.push_back(static_cast<char>('b' + 'c' + 'd' - x - y));
    } else {
      out.push_back(x);
    }
  }
  return out;
}

std::string ZetaApply(int x, const std::string& w) {
  static const char* kTable[3][3] = {{"adabac", "acac", "adad"},
                                     {"abab", "abacad", "adad"},
                                     {"abab", "acac", "acadab"}};
  if (x < 0 || x > 2) throw DomainError("zeta index must be 0, 1 or 2");
  if (w.size() % 2) throw ParseError("odd length syllable word: " + w);
  std::string out;
  for (size_t i = 0; i < w.size(); i += 2) {
    if (w[i] != 'a' || !IsBcd(w[i + 1])) {
      throw ParseError("expected syllables ab, ac, ad in: " + w);
    }
    out += kTable[x][w[i + 1] - 'b'];
  }
  return out;
}

std::array<int64_t, 3> SyllableCounts(const std::string& w) {
  if (w.size() % 2) throw ParseError("odd length syllable word: " + w);
  std::array<int64_t, 3> c = {0, 0, 0};
  for (size_t i = 0; i < w.size(); i += 2) {
    if (w[i] != 'a' || !IsBcd(w[i + 1])) {
      throw ParseError("expected syllables ab, ac, ad in: " + w);
    }
    ++c[w[i + 1] - 'b'];
  }
  return c;
}

nlohmann::json Witness::ToJson(bool include_word) const {
  nlohmann::json j = {{"k", k},
                      {"syllable", syllable},
                      {"length", word.size()},
                      {"orbit_size", orbit_size},
                      {"weighted_length", weighted_length},
                      {"predicted", predicted},
                      {"orbit_ok", orbit_ok},
                      {"length_ok", length_ok}};
  if (include_word) j["word"] = word;
  return j;
}

Witness WitnessWord(int k, const OmegaSeq& omega, const std::string& neg_tail) {
  if (k < 0 || k > 10) throw DomainError("witness depth must be in [0, 10]");
  const auto norms = metrics::OmegaNorms(omega, k + 1, neg_tail);
  const metrics::Point& pk = norms[k].p;
  int s = 0;
  for (int i = 1; i < 3; ++i) {
    if (pk[i] < pk[s]) s = i;
  }
  Witness wit;
  wit.k = k;
  wit.syllable = std::string("a") + static_cast<char>('b' + s);
  std::string w = wit.syllable;
  for (int i = k - 1; i >= 0; --i) w = ZetaApply(omega.Letter(i), w);
  wit.word = w;
  const auto weights = norms[0].Weights();
  for (char x : w) wit.weighted_length += weights[x - 'a'];
  double pred = norms[k].mu;
  for (int i = 0; i < k; ++i) pred *= norms[i].eta;
  wit.predicted = pred;
  selfsim::GrigGroup g(selfsim::Preset::kFamily, omega);
  wit.orbit_size = ComputeInvertedOrbit(g, w).size();
  wit.orbit_ok = wit.orbit_size >= (1 << k);
  wit.length_ok = std::abs(wit.weighted_length - pred) <= 1e-9 * std::max(1.0, pred);
  return wit;
}

nlohmann::json GrowthWReport::ToJson() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows) {
    rs.push_back({{"R", r.r},
                  {"v_G", r.v_g},
                  {"v_H", r.v_h},
                  {"v_W", r.v_w},
                  {"v_W_3R", r.v_w3},
                  {"Delta", r.delta},
                  {"Sigma", r.sigma},
                  {"lower_lhs", r.lower_lhs},
                  {"upper_rhs", r.upper_rhs},
                  {"lower_ok", r.lower_ok},
                  {"upper_ok", r.upper_ok}});
  }
  return {{"rows", rs}, {"pass", pass}};
}

GrowthWReport GrowthWBoundsCheck(const FiniteGroup& h, int radius,
                                 int64_t budget) {
  if (radius < 0 || radius > 4) throw DomainError("radius must be in [0, 4]");
  selfsim::GrigGroup g(selfsim::Preset::kFamily);
  growth::BallOptions opt;
  opt.budget = budget;
  const auto vg = growth::EnumerateBall(growth::GrigBackend(g), radius, opt)
                      .Cumulative();
  const auto vh =
      growth::EnumerateBall(growth::FiniteBackend(h), radius, opt).Cumulative();
  const auto vw = growth::EnumerateBall(
                      permwreath::PermWreathBackend::Standard(h, g),
                      3 * radius, opt)
                      .Cumulative();
  const DeltaSigmaTable ds = DeltaSigma(g, radius);
  GrowthWReport rep;
  for (int r = 0; r <= radius; ++r) {
    GrowthWRow row;
    row.r = r;
    row.v_g = vg[r];
    row.v_h = vh[r];
    row.v_w = vw[r];
    row.v_w3 = vw[3 * r];
    row.delta = ds.delta[r];
    row.sigma = ds.sigma[r];
    row.lower_lhs = static_cast<double>(row.v_g) *
                    std::pow(static_cast<double>(vh[r / row.delta]), row.delta);
    row.upper_rhs = static_cast<double>(row.v_g) *
                    std::pow(static_cast<double>(h.order()), row.delta) *
                    static_cast<double>(row.sigma);
    row.lower_ok = row.lower_lhs <= static_cast<double>(row.v_w3);
    row.upper_ok = static_cast<double>(row.v_w) <= row.upper_rhs;
    rep.pass = rep.pass && row.lower_ok && row.upper_ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace invorbit
}  // namespace wreathgrowth

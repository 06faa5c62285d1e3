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

#include "wreathgrowth/growth.h"

#include <deque>

namespace wreathgrowth {
namespace growth {

std::vector<int64_t> BallRecord::Cumulative() const {
  std::vector<int64_t> out;
  int64_t total = 0;
  for (int64_t s : spheres) out.push_back(total += s);
  return out;
}

std::optional<int> BallRecord::Find(const std::string& key) const {
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<double, int64_t>> BallRecord::WeightedLevels(
    double tol) const {
  std::vector<double> v = weighted_norms;
  std::sort(v.begin(), v.end());
  std::vector<std::pair<double, int64_t>> out;
  for (double x : v) {
    if (!out.empty() && x - out.back().first <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

int64_t BallRecord::CountWithin(double r, double tol) const {
  int64_t n = 0;
  for (double x : weighted_norms) n += x <= r + tol;
  return n;
}

schreier::LabeledGraph BallRecord::Graph() const {
  if (!has_edges) throw ContractViolation("ball was built without edges");
  schreier::LabeledGraph g;
  g.num_labels = static_cast<int>(labels.size());
  g.base = 0;
  g.out = edges;
  return g;
}

namespace {

// Vertex i of the depth-n tree in heap order: root 0, children 2i+1
// (letter 0) and 2i+2 (letter 1).  Bit i of a portrait is the swap at i.
uint32_t GeneratorPortrait(const selfsim::GrigGroup& g, char x, int n) {
  uint32_t bits = 0;
  for (int depth = 0; depth < n; ++depth) {
    for (int u = 0; u < (1 << depth); ++u) {
      // v has the level-1 letter rightmost: the root-side letters of u
      // come last.
      std::string v(depth + 1, '0');
      for (int k = 0; k < depth; ++k) {
        v[depth - k] = ((u >> (depth - 1 - k)) & 1) ? '1' : '0';
      }
      const std::string img = g.ActVertex(std::string(1, x), v);
      if (img[0] != v[0]) bits |= uint32_t{1} << ((1 << depth) - 1 + u);
    }
  }
  return bits;
}

uint32_t ComposePortraits(uint32_t g, uint32_t h, int vertices) {
  int img[64];
  img[0] = 0;
  uint32_t out = 0;
  for (int v = 0; v < vertices; ++v) {
    const uint32_t gv = (g >> v) & 1;
    out |= (gv ^ ((h >> img[v]) & 1)) << v;
    const int c0 = 2 * v + 1;
    if (c0 < vertices) {
      const int t0 = 2 * img[v] + 1 + static_cast<int>(gv);
      img[c0] = t0;
      img[c0 + 1] = gv ? t0 - 1 : t0 + 1;
    }
  }
  return out;
}

}  // namespace

QuotientDiameter ComputeQuotientDiameter(int level, selfsim::Preset preset,
                                         int max_level) {
  if (level < 1) throw DomainError("level must be >= 1");
  if (level > max_level || level > 5) {
    throw ResourceError("quotient level " + std::to_string(level) +
                        " exceeds the BFS limit " +
                        std::to_string(std::min(max_level, 5)));
  }
  selfsim::GrigGroup g(preset);
  const int vertices = (1 << level) - 1;
  std::vector<uint32_t> gens;
  for (char x : {'a', 'b', 'c', 'd'}) {
    gens.push_back(GeneratorPortrait(g, x, level));
  }
  std::vector<uint64_t> seen((uint64_t{1} << vertices) / 64 + 1, 0);
  auto mark = [&](uint32_t p) {
    uint64_t& w = seen[p >> 6];
    const uint64_t bit = uint64_t{1} << (p & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  };
  QuotientDiameter out;
  out.level = level;
  std::vector<uint32_t> frontier{0};
  mark(0);
  while (!frontier.empty()) {
    out.spheres.push_back(frontier.size());
    out.order += frontier.size();
    std::vector<uint32_t> next;
    for (uint32_t p : frontier) {
      for (uint32_t s : gens) {
        const uint32_t q = ComposePortraits(p, s, vertices);
        if (mark(q)) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  out.diameter = static_cast<int>(out.spheres.size()) - 1;
  return out;
}

std::vector<std::string> FindDeadEnds(const BallRecord& ball) {
  if (!ball.has_edges) throw ContractViolation("ball was built without edges");
  const int k = static_cast<int>(ball.labels.size());
  std::vector<std::string> out;
  for (int v = 0; v < ball.size(); ++v) {
    const int n = ball.norms[v];
    if (n > ball.radius - 1) continue;
    bool dead = true;
    for (int s = 0; s < k && dead; ++s) {
      const int t = ball.edges[v * k + s];
      if (t >= 0 && ball.norms[t] == n + 1) dead = false;
    }
    if (dead) out.push_back(ball.keys[v]);
  }
  return out;
}

std::vector<std::string> FindKHills(const BallRecord& ball, int k) {
  if (!ball.has_edges) throw ContractViolation("ball was built without edges");
  if (k < 1) throw DomainError("k must be >= 1");
  const int m = static_cast<int>(ball.labels.size());
  std::vector<std::string> out;
  std::vector<int> stamp(ball.size(), -1);
  for (int v = 0; v < ball.size(); ++v) {
    const int n = ball.norms[v];
    if (n > ball.radius - k - 1) continue;
    bool escaped = false;
    std::deque<int> queue{v};
    stamp[v] = v;
    while (!queue.empty() && !escaped) {
      const int x = queue.front();
      queue.pop_front();
      for (int s = 0; s < m; ++s) {
        const int t = ball.edges[x * m + s];
        if (t < 0) continue;
        const int nt = ball.norms[t];
        if (nt == n + 1) {
          escaped = true;
          break;
        }
        if (nt < n - k + 1 || nt > n || stamp[t] == v) continue;
        stamp[t] = v;
        queue.push_back(t);
      }
    }
    if (!escaped) out.push_back(ball.keys[v]);
  }
  return out;
}

}  // namespace growth
}  // namespace wreathgrowth

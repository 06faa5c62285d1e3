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

// Schreier graphs: orbit points of the ray 1^inf under G_omega, generic
// BFS construction over any action, the Gray-code line, and comparison of
// marked balls.

#ifndef WREATHGROWTH_SCHREIER_H_
#define WREATHGROWTH_SCHREIER_H_

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreathgrowth/errors.h"
#include "wreathgrowth/finite_group.h"
#include "wreathgrowth/selfsim.h"

namespace wreathgrowth {
namespace schreier {

// The sequence ...111u; the level-1 letter is the last one of u.
struct OrbitPoint {
  std::string word;

  OrbitPoint() = default;
  explicit OrbitPoint(std::string u);  // canonicalises

  std::string ToString() const;  // "1̄" followed by u
  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
  friend auto operator<=>(const OrbitPoint&, const OrbitPoint&) = default;
};

// xi = 1^inf.
inline OrbitPoint Xi() { return OrbitPoint(); }

// The point reached from p by the generator word w.
OrbitPoint ActOrbit(const selfsim::GrigGroup& g, const std::string& w,
                    const OrbitPoint& p, long long shift = 0);

// Out-edges by label; -1 marks an edge leaving the explored region.
struct LabeledGraph {
  int num_labels = 0;
  int base = 0;
  std::vector<int> out;  // out[v * num_labels + label]

  int num_vertices() const {
    return num_labels ? static_cast<int>(out.size()) / num_labels : 1;
  }
  int Target(int v, int label) const { return out[v * num_labels + label]; }
};

struct SchreierGraph {
  std::vector<std::string> labels;
  std::vector<std::string> keys;   // canonical keys, discovery order
  std::vector<std::string> names;  // display names
  LabeledGraph graph;              // basepoint is vertex 0

  int num_vertices() const { return static_cast<int>(keys.size()); }
  int Target(int v, int label) const { return graph.Target(v, label); }
  std::string ToDot() const;
  std::string ToCsv() const;
};

// Action interface used by BuildSchreier:
//   using Point = ...;
//   int num_generators() const;
//   std::string label(int i) const;
//   Point Act(const Point&, int i) const;
//   std::string Key(const Point&) const;
//   std::string Name(const Point&) const;
template <typename A>
concept SchreierAction = requires(const A& a, const typename A::Point& p) {
  { a.num_generators() } -> std::convertible_to<int>;
  { a.label(0) } -> std::convertible_to<std::string>;
  { a.Act(p, 0) } -> std::convertible_to<typename A::Point>;
  { a.Key(p) } -> std::convertible_to<std::string>;
  { a.Name(p) } -> std::convertible_to<std::string>;
};

// BFS closure of the basepoint.  Stops after `limit` vertices, or once
// every vertex at distance <= radius has been expanded (radius < 0: no
// radius bound).  Edges into unexplored points are -1.
template <SchreierAction A>
SchreierGraph BuildSchreier(const A& action, const typename A::Point& base,
                            int limit, int radius = -1) {
  if (limit < 1) throw DomainError("schreier limit must be >= 1");
  const int k = action.num_generators();
  SchreierGraph g;
  for (int i = 0; i < k; ++i) g.labels.push_back(action.label(i));
  g.graph.num_labels = k;
  std::unordered_map<std::string, int> index;
  std::vector<typename A::Point> points;
  std::vector<int> dist;
  auto add = [&](const typename A::Point& p, int d) {
    const std::string key = action.Key(p);
    auto [it, fresh] = index.emplace(key, static_cast<int>(points.size()));
    if (fresh) {
      points.push_back(p);
      dist.push_back(d);
      g.keys.push_back(key);
      g.names.push_back(action.Name(p));
    }
    return it->second;
  };
  add(base, 0);
  std::vector<std::vector<typename A::Point>> images;
  for (size_t v = 0; v < points.size(); ++v) {
    g.graph.out.resize((v + 1) * k, -1);
    if (radius >= 0 && dist[v] > radius) continue;
    for (int i = 0; i < k; ++i) {
      typename A::Point q = action.Act(points[v], i);
      const std::string key = action.Key(q);
      auto it = index.find(key);
      if (it != index.end()) {
        g.graph.out[v * k + i] = it->second;
      } else if (static_cast<int>(points.size()) < limit) {
        g.graph.out[v * k + i] = add(q, dist[v] + 1);
      }
    }
  }
  g.graph.out.resize(points.size() * k, -1);
  return g;
}

// Points 0..n-1 permuted by the given permutations.
class PermutationAction {
 public:
  using Point = int;
  PermutationAction(std::vector<Perm> gens, std::vector<std::string> labels)
      : gens_(std::move(gens)), labels_(std::move(labels)) {}
  int num_generators() const { return static_cast<int>(gens_.size()); }
  std::string label(int i) const { return labels_[i]; }
  int Act(int p, int i) const { return gens_[i][p]; }
  std::string Key(int p) const { return std::to_string(p); }
  std::string Name(int p) const { return std::to_string(p + 1); }

 private:
  std::vector<Perm> gens_;
  std::vector<std::string> labels_;
};

// G_omega acting on the orbit of 1^inf, generators given as words.
class GrigOrbitAction {
 public:
  using Point = OrbitPoint;
  explicit GrigOrbitAction(const selfsim::GrigGroup& g,
                           std::vector<std::string> gens = {"a", "b", "c",
                                                            "d"})
      : g_(g), gens_(std::move(gens)) {}
  int num_generators() const { return static_cast<int>(gens_.size()); }
  std::string label(int i) const { return gens_[i]; }
  OrbitPoint Act(const OrbitPoint& p, int i) const {
    return ActOrbit(g_, gens_[i], p);
  }
  std::string Key(const OrbitPoint& p) const { return p.word; }
  std::string Name(const OrbitPoint& p) const { return p.ToString(); }

 private:
  const selfsim::GrigGroup& g_;
  std::vector<std::string> gens_;
};

// Closed form: position n is the complement of the reflected Gray code of
// n, read with the level-1 letter last.
OrbitPoint GrayPositionPoint(uint64_t n);
uint64_t GrayPointPosition(const OrbitPoint& p);

// Positions on the Schreier line of 1^inf, found by walking the line.
class GrigLine {
 public:
  explicit GrigLine(const selfsim::GrigGroup& g) : g_(g) {}

  // Distance from 1^inf along the line.
  uint64_t Position(const OrbitPoint& p);
  OrbitPoint Point(uint64_t n);
  // Action of a generator word on positions.
  uint64_t Act(const std::string& gen, uint64_t n);

 private:
  void WalkTo(uint64_t n);

  const selfsim::GrigGroup& g_;
  std::vector<OrbitPoint> points_;
  std::unordered_map<std::string, uint64_t> position_;
};

// True iff the radius-R balls around the basepoints are isomorphic as
// labelled rooted graphs (induced subgraphs on vertices at distance <= R).
bool MarkedBallEqual(const LabeledGraph& g1, const LabeledGraph& g2, int radius);
inline bool MarkedBallEqual(const SchreierGraph& g1, const SchreierGraph& g2,
                            int radius) {
  if (g1.labels != g2.labels) return false;
  return MarkedBallEqual(g1.graph, g2.graph, radius);
}

// Same graph re-rooted at vertex v.
LabeledGraph Rerooted(const LabeledGraph& g, int v);

}  // namespace schreier
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_SCHREIER_H_

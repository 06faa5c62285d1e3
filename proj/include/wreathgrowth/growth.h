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

// Exact ball enumeration over marked groups: BFS by canonical key,
// weighted shortest-word search, quotient diameters of the Grigorchuk
// group, dead ends and k-hills, and generating-set comparison.

#ifndef WREATHGROWTH_GROWTH_H_
#define WREATHGROWTH_GROWTH_H_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wreathgrowth/errors.h"
#include "wreathgrowth/schreier.h"
#include "wreathgrowth/selfsim.h"

namespace wreathgrowth {
namespace growth {

template <typename E>
struct Generator {
  std::string label;
  E element;
  double weight = 1.0;
};

template <typename B>
concept MarkedGroupBackend =
    requires(const B& b, const typename B::Element& e) {
      { b.Identity() } -> std::same_as<typename B::Element>;
      { b.Multiply(e, e) } -> std::same_as<typename B::Element>;
      { b.Invert(e) } -> std::same_as<typename B::Element>;
      { b.Key(e) } -> std::convertible_to<std::string>;
      {
        b.generators()
      } -> std::convertible_to<const std::vector<Generator<typename B::Element>>&>;
    };

struct BallOptions {
  bool edges = false;
  bool keep_elements = false;
  int64_t budget = 10'000'000;
  double tolerance = 1e-9;
};

struct BallRecord {
  int radius = 0;               // unweighted
  double weighted_radius = -1;  // >= 0 for weighted balls
  std::vector<int64_t> spheres;
  std::vector<std::string> keys;  // discovery order, norms non-decreasing
  std::vector<int> norms;
  std::vector<double> weighted_norms;
  std::unordered_map<std::string, int> index;
  std::vector<std::string> labels;
  bool has_edges = false;
  std::vector<int> edges;  // edges[v * labels.size() + s], -1 outside

  bool weighted() const { return weighted_radius >= 0; }
  int64_t size() const { return static_cast<int64_t>(keys.size()); }
  std::vector<int64_t> Cumulative() const;
  std::optional<int> Find(const std::string& key) const;
  // Distinct weighted norms with multiplicities.
  std::vector<std::pair<double, int64_t>> WeightedLevels(double tol = 1e-9) const;
  int64_t CountWithin(double r, double tol = 1e-9) const;
  // Cayley graph of the ball rooted at the identity; requires edges.
  schreier::LabeledGraph Graph() const;
};

template <typename E>
struct Ball : BallRecord {
  std::vector<E> elements;  // parallel to keys when kept
};

// Unweighted BFS ball of radius R.
template <MarkedGroupBackend B>
Ball<typename B::Element> EnumerateBall(const B& backend, int radius,
                                        const BallOptions& opt = {}) {
  using E = typename B::Element;
  if (radius < 0) throw DomainError("radius must be >= 0");
  const auto& gens = backend.generators();
  const int k = static_cast<int>(gens.size());
  Ball<E> ball;
  ball.radius = radius;
  for (const auto& g : gens) ball.labels.push_back(g.label);
  ball.has_edges = opt.edges;
  std::vector<E> frontier{backend.Identity()};
  std::vector<E> all;
  auto add = [&](const std::string& key, int norm) {
    const int id = static_cast<int>(ball.keys.size());
    ball.index.emplace(key, id);
    ball.keys.push_back(key);
    ball.norms.push_back(norm);
    return id;
  };
  add(backend.Key(frontier[0]), 0);
  if (opt.keep_elements) ball.elements.push_back(frontier[0]);
  ball.spheres.push_back(1);
  std::vector<int> frontier_ids{0};
  for (int r = 0; r <= radius; ++r) {
    std::vector<E> next;
    std::vector<int> next_ids;
    if (opt.edges) ball.edges.resize(ball.keys.size() * k, -1);
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (int s = 0; s < k; ++s) {
        E y = backend.Multiply(frontier[i], gens[s].element);
        std::string key = backend.Key(y);
        auto it = ball.index.find(key);
        int target = -1;
        if (it != ball.index.end()) {
          target = it->second;
        } else if (r < radius) {
          if (ball.size() >= opt.budget) {
            throw ResourceError("element budget " +
                                std::to_string(opt.budget) +
                                " exceeded at radius " + std::to_string(r + 1));
          }
          target = add(key, r + 1);
          if (opt.keep_elements) ball.elements.push_back(y);
          next_ids.push_back(target);
          next.push_back(std::move(y));
        }
        if (opt.edges) {
          ball.edges.resize(ball.keys.size() * k, -1);
          ball.edges[frontier_ids[i] * k + s] = target;
        }
      }
    }
    if (r < radius) ball.spheres.push_back(static_cast<int64_t>(next.size()));
    frontier = std::move(next);
    frontier_ids = std::move(next_ids);
  }
  if (opt.edges) ball.edges.resize(ball.keys.size() * k, -1);
  return ball;
}

// Minimal weighted word length <= radius (+tol), generator weights >= 0.
// Zero-weight moves are closed over automatically by the search.
template <MarkedGroupBackend B>
Ball<typename B::Element> EnumerateWeightedBall(const B& backend,
                                                double radius,
                                                const BallOptions& opt = {}) {
  using E = typename B::Element;
  if (!(radius >= 0)) throw DomainError("radius must be >= 0");
  const auto& gens = backend.generators();
  for (const auto& g : gens) {
    if (!(g.weight >= 0) || !std::isfinite(g.weight)) {
      throw DomainError("generator weights must be finite and >= 0");
    }
  }
  const double tol = opt.tolerance;
  Ball<E> ball;
  ball.weighted_radius = radius;
  for (const auto& g : gens) ball.labels.push_back(g.label);
  struct Entry {
    double dist;
    std::string key;
    bool operator>(const Entry& o) const {
      return dist != o.dist ? dist > o.dist : key > o.key;
    }
  };
  std::unordered_map<std::string, std::pair<double, E>> best;
  std::set<std::string> settled;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  const E id = backend.Identity();
  const std::string id_key = backend.Key(id);
  best.emplace(id_key, std::make_pair(0.0, id));
  pq.push({0.0, id_key});
  while (!pq.empty()) {
    Entry top = pq.top();
    pq.pop();
    if (settled.count(top.key)) continue;
    auto& [dist, elem] = best.at(top.key);
    if (top.dist != dist) continue;
    settled.insert(top.key);
    ball.index.emplace(top.key, static_cast<int>(ball.keys.size()));
    ball.keys.push_back(top.key);
    ball.weighted_norms.push_back(dist);
    if (opt.keep_elements) ball.elements.push_back(elem);
    const E x = elem;
    const double dx = dist;
    for (const auto& g : gens) {
      const double nd = dx + g.weight;
      if (nd > radius + tol) continue;
      E y = backend.Multiply(x, g.element);
      std::string key = backend.Key(y);
      if (settled.count(key)) continue;
      auto it = best.find(key);
      if (it == best.end()) {
        if (static_cast<int64_t>(best.size()) >= opt.budget) {
          throw ResourceError("element budget " + std::to_string(opt.budget) +
                              " exceeded at weighted radius " +
                              std::to_string(dx));
        }
        best.emplace(key, std::make_pair(nd, std::move(y)));
        pq.push({nd, std::move(key)});
      } else if (nd < it->second.first - tol) {
        it->second = {nd, std::move(y)};
        pq.push({nd, std::move(key)});
      }
    }
  }
  return ball;
}

// Restricts a backend to another generating set.
template <MarkedGroupBackend B>
class Regenerated {
 public:
  using Element = typename B::Element;
  Regenerated(const B& base, std::vector<Generator<Element>> gens)
      : base_(base), gens_(std::move(gens)) {}
  Element Identity() const { return base_.Identity(); }
  Element Multiply(const Element& u, const Element& v) const {
    return base_.Multiply(u, v);
  }
  Element Invert(const Element& u) const { return base_.Invert(u); }
  std::string Key(const Element& u) const { return base_.Key(u); }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  const B& base_;
  std::vector<Generator<Element>> gens_;
};

// Word of generator labels evaluated in the backend.
template <MarkedGroupBackend B>
typename B::Element Evaluate(const B& backend, const std::vector<int>& word) {
  auto x = backend.Identity();
  for (int s : word) x = backend.Multiply(x, backend.generators().at(s).element);
  return x;
}

struct QuotientDiameter {
  int level = 0;
  int diameter = 0;
  uint64_t order = 0;
  std::vector<uint64_t> spheres;
};

// Cayley graph of G_n = G / Stab(level n) with generators a, b, c, d.
// Levels above max_level are refused (|G_6| = 2^42).
QuotientDiameter ComputeQuotientDiameter(int level, selfsim::Preset preset,
                                         int max_level = 5);

// Elements of norm n <= R - 1 with no neighbour of norm n + 1.
std::vector<std::string> FindDeadEnds(const BallRecord& ball);

// Tops of k-hills of norm <= R - k - 1: every path to norm n + 1 passes
// through norm n - k.
std::vector<std::string> FindKHills(const BallRecord& ball, int k);

struct GensetComparison {
  int c = 0;  // max over s in S of |s|_{S'}
  bool pass = false;
  // (R', v_S(R'), v_{S'}(C R'))
  std::vector<std::tuple<int, int64_t, int64_t>> rows;
};

// v_S(R') <= v_{S'}(C R') for R' <= R / C with C = max_{s in S} |s|_{S'}.
template <MarkedGroupBackend B>
GensetComparison GensetEquivCheck(const B& s_backend, const B& sp_backend,
                                  int radius, const BallOptions& opt = {}) {
  GensetComparison out;
  if (radius < 1) throw DomainError("radius must be >= 1");
  Ball<typename B::Element> sp;
  int r = 0;
  for (;; ++r) {
    if (r > radius) {
      throw DomainError("generator not reached within radius " +
                        std::to_string(radius));
    }
    sp = EnumerateBall(sp_backend, r, opt);
    bool all = true;
    int c = 0;
    for (const auto& g : s_backend.generators()) {
      auto f = sp.Find(s_backend.Key(g.element));
      if (!f) {
        all = false;
        break;
      }
      c = std::max(c, sp.norms[*f]);
    }
    if (all) {
      out.c = std::max(c, 1);
      break;
    }
  }
  const int rmax = radius / out.c;
  const auto vs = EnumerateBall(s_backend, rmax, opt).Cumulative();
  const auto vsp = EnumerateBall(sp_backend, out.c * rmax, opt).Cumulative();
  out.pass = true;
  for (int rr = 0; rr <= rmax; ++rr) {
    out.rows.emplace_back(rr, vs[rr], vsp[out.c * rr]);
    if (vs[rr] > vsp[out.c * rr]) out.pass = false;
  }
  return out;
}

}  // namespace growth
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_GROWTH_H_

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

#include "wreathgrowth/schreier.h"

#include <sstream>

namespace wreathgrowth {
namespace schreier {

OrbitPoint::OrbitPoint(std::string u) {
  for (char c : u) {
    if (c != '0' && c != '1') throw DomainError("orbit point must be binary");
  }
  const size_t first = u.find('0');
  word = first == std::string::npos ? std::string() : u.substr(first);
}

std::string OrbitPoint::ToString() const { return "1̄" + word; }

OrbitPoint ActOrbit(const selfsim::GrigGroup& g, const std::string& w,
                    const OrbitPoint& p, long long shift) {
  std::string r = p.word;
  for (char x0 : w) {
    if (x0 == '1') continue;
    if (x0 < 'a' || x0 > 'd') throw ParseError("bad generator in word");
    char x = x0;
    long long s = shift;
    int pos = static_cast<int>(r.size()) - 1;
    bool done = false;
    for (; pos >= 0; --pos) {
      if (x == 'a') {
        r[pos] = r[pos] == '0' ? '1' : '0';
        done = true;
        break;
      }
      const std::string& sec = g.GenSection(x, r[pos] - '0', s);
      if (sec.empty()) {
        done = true;
        break;
      }
      x = sec[0];
      ++s;
    }
    // In the 1-tail, b, c and d sections on 1 stay in {b, c, d}.
    if (!done && x == 'a') r.insert(r.begin(), '0');
    r = OrbitPoint(r).word;
  }
  return OrbitPoint(r);
}

std::string SchreierGraph::ToDot() const {
  std::ostringstream os;
  os << "digraph schreier {\n";
  for (int v = 0; v < num_vertices(); ++v) {
    os << "  " << v << " [label=\"" << names[v] << "\"";
    if (v == 0) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (int v = 0; v < num_vertices(); ++v) {
    for (int l = 0; l < graph.num_labels; ++l) {
      const int t = Target(v, l);
      if (t < 0) continue;
      os << "  " << v << " -> " << t << " [label=\"" << labels[l] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string SchreierGraph::ToCsv() const {
  std::ostringstream os;
  os << "source,label,target\n";
  for (int v = 0; v < num_vertices(); ++v) {
    for (int l = 0; l < graph.num_labels; ++l) {
      const int t = Target(v, l);
      if (t < 0) continue;
      os << names[v] << "," << labels[l] << "," << names[t] << "\n";
    }
  }
  return os.str();
}

OrbitPoint GrayPositionPoint(uint64_t n) {
  const uint64_t gray = n ^ (n >> 1);
  std::string u;
  for (uint64_t b = gray; b != 0; b >>= 1) u.insert(u.begin(), (b & 1) ? '0' : '1');
  return OrbitPoint(u);
}

uint64_t GrayPointPosition(const OrbitPoint& p) {
  if (p.word.size() > 63) throw ResourceError("position exceeds 64 bits");
  uint64_t gray = 0;
  for (char c : p.word) gray = (gray << 1) | (c == '0' ? 1 : 0);
  uint64_t n = 0;
  for (uint64_t g = gray; g != 0; g >>= 1) n ^= g;
  return n;
}

void GrigLine::WalkTo(uint64_t n) {
  if (points_.empty()) {
    points_.push_back(Xi());
    position_[Xi().word] = 0;
  }
  while (points_.size() <= n) {
    const OrbitPoint& cur = points_.back();
    const OrbitPoint* prev =
        points_.size() >= 2 ? &points_[points_.size() - 2] : nullptr;
    bool advanced = false;
    for (const char* x : {"a", "b", "c", "d"}) {
      OrbitPoint q = ActOrbit(g_, x, cur);
      if (q == cur || (prev && q == *prev)) continue;
      position_[q.word] = points_.size();
      points_.push_back(std::move(q));
      advanced = true;
      break;
    }
    if (!advanced) throw ContractViolation("orbit of 1^inf is not a ray");
  }
}

OrbitPoint GrigLine::Point(uint64_t n) {
  if (n > (uint64_t{1} << 26)) throw ResourceError("line position too large");
  WalkTo(n);
  return points_[n];
}

uint64_t GrigLine::Position(const OrbitPoint& p) {
  if (p.word.size() > 25) throw ResourceError("orbit point too deep to walk");
  auto it = position_.find(p.word);
  if (it != position_.end()) return it->second;
  WalkTo(uint64_t{1} << (p.word.size() + 1));
  it = position_.find(p.word);
  if (it == position_.end()) throw ContractViolation("point not on the line");
  return it->second;
}

uint64_t GrigLine::Act(const std::string& gen, uint64_t n) {
  return Position(ActOrbit(g_, gen, Point(n)));
}

namespace {

std::vector<int> Distances(const LabeledGraph& g, int radius) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<int> queue{g.base};
  dist[g.base] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (dist[v] >= radius) continue;
    for (int l = 0; l < g.num_labels; ++l) {
      const int t = g.Target(v, l);
      if (t >= 0 && dist[t] < 0) {
        dist[t] = dist[v] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

}  // namespace

bool MarkedBallEqual(const LabeledGraph& g1, const LabeledGraph& g2,
                     int radius) {
  if (radius < 0) throw DomainError("radius must be >= 0");
  if (g1.num_labels != g2.num_labels) return false;
  const std::vector<int> d1 = Distances(g1, radius);
  const std::vector<int> d2 = Distances(g2, radius);
  std::vector<int> fwd(g1.num_vertices(), -1), bwd(g2.num_vertices(), -1);
  std::deque<int> queue{g1.base};
  fwd[g1.base] = g2.base;
  bwd[g2.base] = g1.base;
  while (!queue.empty()) {
    const int v1 = queue.front();
    queue.pop_front();
    const int v2 = fwd[v1];
    if (d1[v1] != d2[v2]) return false;
    for (int l = 0; l < g1.num_labels; ++l) {
      const int t1 = g1.Target(v1, l);
      const int t2 = g2.Target(v2, l);
      const bool in1 = t1 >= 0 && d1[t1] >= 0;
      const bool in2 = t2 >= 0 && d2[t2] >= 0;
      if (in1 != in2) return false;
      if (!in1) continue;
      if (fwd[t1] < 0 && bwd[t2] < 0) {
        fwd[t1] = t2;
        bwd[t2] = t1;
        queue.push_back(t1);
      } else if (fwd[t1] != t2 || bwd[t2] != t1) {
        return false;
      }
    }
  }
  int n1 = 0, n2 = 0;
  for (int d : d1) n1 += d >= 0;
  for (int d : d2) n2 += d >= 0;
  return n1 == n2;
}

LabeledGraph Rerooted(const LabeledGraph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw DomainError("vertex out of range");
  LabeledGraph r = g;
  r.base = v;
  return r;
}

}  // namespace schreier
}  // namespace wreathgrowth

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

#include <set>

#include "gtest/gtest.h"

namespace wreathgrowth {
namespace schreier {
namespace {

using selfsim::GrigGroup;
using selfsim::Preset;

int VertexOf(const SchreierGraph& g, const OrbitPoint& p) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.keys[v] == p.word) return v;
  }
  return -1;
}

// Undirected simple-graph degree ignoring loops.
int LineDegree(const SchreierGraph& g, int v) {
  std::set<int> nbrs;
  for (int l = 0; l < g.graph.num_labels; ++l) {
    const int t = g.Target(v, l);
    if (t >= 0 && t != v) nbrs.insert(t);
  }
  return static_cast<int>(nbrs.size());
}

TEST(OrbitPointTest, Canonical) {
  EXPECT_EQ(OrbitPoint("111").word, "");
  EXPECT_EQ(OrbitPoint("1101").word, "01");
  EXPECT_EQ(OrbitPoint("00").ToString(), "1̄00");
  EXPECT_THROW(OrbitPoint("102"), DomainError);
}

TEST(SchreierTest, SymmetricGroupOnPoints) {
  PermutationAction act({{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}},
                        {"(12)", "(23)", "(34)"});
  SchreierGraph g = BuildSchreier(act, 0, 100);
  ASSERT_EQ(g.num_vertices(), 4);
  // Path 1-2-3-4 with loops elsewhere.
  int loops = 0;
  for (int v = 0; v < 4; ++v) {
    EXPECT_LE(LineDegree(g, v), 2);
    for (int l = 0; l < 3; ++l) loops += g.Target(v, l) == v;
  }
  EXPECT_EQ(loops, 12 - 6);
  EXPECT_EQ(LineDegree(g, 0), 1);
  EXPECT_EQ(g.names, (std::vector<std::string>{"1", "2", "3", "4"}));
}

struct SubsetAction {
  using Point = std::pair<int, int>;
  std::vector<Perm> gens;
  int num_generators() const { return static_cast<int>(gens.size()); }
  std::string label(int i) const { return "s" + std::to_string(i); }
  Point Act(const Point& p, int i) const {
    int x = gens[i][p.first], y = gens[i][p.second];
    return {std::min(x, y), std::max(x, y)};
  }
  std::string Key(const Point& p) const {
    return std::to_string(p.first) + "," + std::to_string(p.second);
  }
  std::string Name(const Point& p) const { return Key(p); }
};

struct ConjugationAction {
  using Point = Perm;
  std::vector<Perm> gens;
  int num_generators() const { return static_cast<int>(gens.size()); }
  std::string label(int i) const { return "s" + std::to_string(i); }
  Point Act(const Point& p, int i) const {
    return Compose(Compose(InversePerm(gens[i]), p), gens[i]);
  }
  std::string Key(const Point& p) const {
    std::string k;
    for (int x : p) k += static_cast<char>('0' + x);
    return k;
  }
  std::string Name(const Point& p) const { return Key(p); }
};

struct RightMultiplication : ConjugationAction {
  Point Act(const Point& p, int i) const { return Compose(p, gens[i]); }
};

TEST(SchreierTest, TransitiveFiniteActions) {
  std::vector<Perm> gens = {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
  EXPECT_EQ(BuildSchreier(SubsetAction{gens}, {0, 1}, 100).num_vertices(), 6);
  RightMultiplication right;
  right.gens = gens;
  EXPECT_EQ(BuildSchreier(right, IdentityPerm(4), 100).num_vertices(), 24);
  // Conjugation splits by cycle type; the class of a transposition has 6.
  ConjugationAction conj{gens};
  EXPECT_EQ(BuildSchreier(conj, Perm{1, 0, 2, 3}, 100).num_vertices(), 6);
  EXPECT_EQ(BuildSchreier(conj, Perm{1, 2, 3, 0}, 100).num_vertices(), 6);
  EXPECT_EQ(BuildSchreier(conj, Perm{1, 0, 3, 2}, 100).num_vertices(), 3);
}

TEST(SchreierTest, TrivialGeneratorSet) {
  PermutationAction act({}, {});
  SchreierGraph g = BuildSchreier(act, 0, 10);
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_TRUE(g.graph.out.empty());
  EXPECT_THROW(BuildSchreier(act, 0, 0), DomainError);
}

TEST(SchreierTest, LimitLeavesOpenEdges) {
  GrigGroup g(Preset::kFsa);
  SchreierGraph sg = BuildSchreier(GrigOrbitAction(g), Xi(), 5);
  ASSERT_EQ(sg.num_vertices(), 5);
  int open = 0;
  for (int v = 0; v < 5; ++v) {
    for (int l = 0; l < 4; ++l) open += sg.Target(v, l) < 0;
  }
  EXPECT_GT(open, 0);
}

// The figure: a joins 2j and 2j+1; on odd pairs one of b, c, d loops and
// the other two form a double edge.
TEST(GrigLineTest, FigureFirstSeventeen) {
  GrigGroup g(Preset::kFsa);
  SchreierGraph sg = BuildSchreier(GrigOrbitAction(g), Xi(), 17);
  ASSERT_EQ(sg.num_vertices(), 17);
  const std::vector<std::string> figure = {
      "",     "0",     "00",     "01",     "001",    "000",
      "010",  "011",   "0011",   "0010",   "0000",   "0001",
      "0101", "0100",  "0110",   "0111",   "00111"};
  GrigLine line(g);
  for (uint64_t n = 0; n < figure.size(); ++n) {
    EXPECT_EQ(line.Point(n).word, figure[n]) << n;
  }
  const std::string loops = "dcdbdcdd";
  for (uint64_t n = 1; n < 17; n += 2) {
    std::string fixed;
    for (const char* x : {"b", "c", "d"}) {
      if (line.Act(x, n) == n) {
        fixed += x;
        EXPECT_EQ(line.Act(x, n + 1), n + 1);
      } else {
        EXPECT_EQ(line.Act(x, n), n + 1);
        EXPECT_EQ(line.Act(x, n + 1), n);
      }
    }
    ASSERT_EQ(fixed.size(), 1u);
    EXPECT_EQ(fixed[0], loops[n / 2]) << n;
  }
}

TEST(GrigLineTest, FormulaExamples) {
  GrigGroup g(Preset::kFsa);
  GrigLine line(g);
  EXPECT_EQ(line.Position(Xi()), 0u);
  EXPECT_EQ(line.Position(OrbitPoint("0")), 1u);
  EXPECT_EQ(line.Position(OrbitPoint("00")), 2u);
  EXPECT_EQ(line.Position(OrbitPoint("01")), 3u);
  EXPECT_EQ(line.Act("a", 0), 1u);
  EXPECT_EQ(line.Act("a", 1), 0u);
  EXPECT_EQ(line.Act("a", 4), 5u);
  for (const char* x : {"b", "c", "d"}) EXPECT_EQ(line.Act(x, 0), 0u);
}

TEST(GrigLineTest, GrayClosedFormAgreesWithWalk) {
  for (Preset p : {Preset::kFsa, Preset::kFamily}) {
    GrigGroup g(p, OmegaSeq::Parse("syllables:0 1 2 2 0 1 tail=012"));
    GrigLine line(g);
    for (uint64_t n = 0; n < 1024; ++n) {
      const OrbitPoint pt = line.Point(n);
      EXPECT_EQ(GrayPositionPoint(n), pt) << n;
      EXPECT_EQ(GrayPointPosition(pt), n);
      EXPECT_EQ(line.Position(pt), n);
      if (n > 0) {
        // Consecutive points differ in one letter once padded with 1s.
        std::string u = line.Point(n - 1).word, v = pt.word;
        const size_t len = std::max(u.size(), v.size());
        u.insert(0, len - u.size(), '1');
        v.insert(0, len - v.size(), '1');
        int diff = 0;
        for (size_t k = 0; k < len; ++k) diff += u[k] != v[k];
        EXPECT_EQ(diff, 1) << n;
      }
    }
  }
}

TEST(GrigLineTest, OddPairPatternAndLineDegree) {
  GrigGroup g(Preset::kFsa);
  GrigLine line(g);
  for (uint64_t n = 1; n + 1 < 1024; n += 2) {
    int fixed = 0;
    for (const char* x : {"b", "c", "d"}) {
      if (line.Act(x, n) == n) {
        ++fixed;
        EXPECT_EQ(line.Act(x, n + 1), n + 1);
      } else {
        EXPECT_EQ(line.Act(x, n), n + 1);
      }
    }
    EXPECT_EQ(fixed, 1) << n;
  }
  SchreierGraph sg = BuildSchreier(GrigOrbitAction(g), Xi(), 1024);
  for (int v = 0; v < sg.num_vertices(); ++v) EXPECT_LE(LineDegree(sg, v), 2);
}

TEST(GrigLineTest, GeneratorsAreInvolutionsOnPoints) {
  GrigGroup g(Preset::kFamily, OmegaSeq::Periodic("0112"));
  for (uint64_t n = 0; n < 200; ++n) {
    const OrbitPoint p = GrayPositionPoint(n);
    for (const char* x : {"a", "b", "c", "d"}) {
      EXPECT_EQ(ActOrbit(g, std::string(x) + x, p), p);
    }
    EXPECT_EQ(ActOrbit(g, "bcd", p), p);
  }
}

TEST(MarkedBallTest, SelfAndDistinctOmega) {
  GrigGroup g012(Preset::kFamily, OmegaSeq::Periodic("012"));
  GrigGroup g021(Preset::kFamily, OmegaSeq::Periodic("021"));
  SchreierGraph a = BuildSchreier(GrigOrbitAction(g012), Xi(), 1 << 20, 4);
  SchreierGraph b = BuildSchreier(GrigOrbitAction(g021), Xi(), 1 << 20, 4);
  EXPECT_TRUE(MarkedBallEqual(a, a, 3));
  EXPECT_FALSE(MarkedBallEqual(a, b, 3));
  EXPECT_TRUE(MarkedBallEqual(a, b, 1));
}

// x_i = 1̄0^i lies at P_i = 0, 1, 2, 5, 10, 21, ... and the marked balls
// around x_i and x_j, i < j, coincide up to radius P_i - 1 but not P_i.
TEST(MarkedBallTest, BallsAroundXiCoincide) {
  const std::vector<uint64_t> expected = {0, 1, 2, 5, 10, 21, 42, 85};
  for (const char* om : {"012", "021", "0112"}) {
    GrigGroup g(Preset::kFamily, OmegaSeq::Periodic(om));
    GrigLine line(g);
    SchreierGraph sg = BuildSchreier(GrigOrbitAction(g), Xi(), 1 << 20, 200);
    std::vector<int> vx;
    for (int i = 0; i < 8; ++i) {
      const OrbitPoint xi(std::string(i, '0'));
      EXPECT_EQ(line.Position(xi), expected[i]);
      vx.push_back(VertexOf(sg, xi));
      ASSERT_GE(vx.back(), 0);
    }
    for (int i = 2; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        const LabeledGraph a = Rerooted(sg.graph, vx[i]);
        const LabeledGraph b = Rerooted(sg.graph, vx[j]);
        const int r = static_cast<int>(expected[i]);
        EXPECT_TRUE(MarkedBallEqual(a, b, r - 1)) << om << " " << i << j;
        EXPECT_FALSE(MarkedBallEqual(a, b, r)) << om << " " << i << j;
      }
    }
  }
}

TEST(MarkedBallTest, SchreierBallsRadiusThree) {
  GrigGroup g(Preset::kFsa);
  SchreierGraph sg = BuildSchreier(GrigOrbitAction(g), Xi(), 1 << 20, 60);
  auto at = [&](int i) {
    return Rerooted(sg.graph, VertexOf(sg, OrbitPoint(std::string(i, '0'))));
  };
  for (int i = 3; i < 6; ++i) {
    for (int j = 3; j < 6; ++j) EXPECT_TRUE(MarkedBallEqual(at(i), at(j), 3));
  }
  EXPECT_FALSE(MarkedBallEqual(at(0), at(3), 3));
  EXPECT_FALSE(MarkedBallEqual(at(2), at(3), 3));
}

TEST(EmitterTest, DotAndCsv) {
  PermutationAction act({{1, 0}}, {"t"});
  SchreierGraph g = BuildSchreier(act, 0, 10);
  EXPECT_EQ(g.ToCsv(), "source,label,target\n1,t,2\n2,t,1\n");
  const std::string dot = g.ToDot();
  EXPECT_NE(dot.find("0 -> 1 [label=\"t\"]"), std::string::npos);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}

}  // namespace
}  // namespace schreier
}  // namespace wreathgrowth

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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "wreathgrowth/metrics.h"

namespace wreathgrowth {
namespace invorbit {
namespace {

using selfsim::GrigGroup;
using selfsim::Preset;

std::string RandomWord(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
  std::string w;
  for (int i = len(rng); i > 0; --i) w.push_back("abcd"[letter(rng)]);
  return w;
}

std::string RandomSyllables(std::mt19937_64& rng, int max_syllables) {
  std::uniform_int_distribution<int> len(1, max_syllables), letter(0, 2);
  std::string w;
  for (int i = len(rng); i > 0; --i) {
    w += 'a';
    w += "bcd"[letter(rng)];
  }
  return w;
}

// Direct evaluation of every suffix, without the orbit table.
std::set<std::string> BruteOrbit(const GrigGroup& g, const std::string& w) {
  std::set<std::string> out;
  for (size_t i = 0; i <= w.size(); ++i) {
    out.insert(schreier::ActOrbit(g, w.substr(i), schreier::Xi()).word);
  }
  return out;
}

std::vector<std::string> Names(const InvertedOrbit& o) {
  std::vector<std::string> out;
  for (const auto& p : o.points) out.push_back(p.ToString());
  return out;
}

TEST(InvertedOrbitTest, WorkedExample) {
  const std::vector<std::string> want = {"1̄", "1̄00", "1̄010"};
  GrigGroup fsa(Preset::kFsa);
  EXPECT_EQ(Names(ComputeInvertedOrbit(fsa, "acadab")), want);
  // Same word after the relabelling b <-> d of the family recursion.
  GrigGroup fam(Preset::kFamily);
  EXPECT_EQ(Names(ComputeInvertedOrbit(fam, "acabad")), want);
}

TEST(InvertedOrbitTest, EmptyWord) {
  GrigGroup g(Preset::kFamily);
  const auto o = ComputeInvertedOrbit(g, "");
  ASSERT_EQ(o.size(), 1);
  EXPECT_EQ(o.points[0], schreier::Xi());
  EXPECT_THROW(ComputeInvertedOrbit(g, "abx"), ParseError);
}

TEST(InvertedOrbitTest, MatchesSuffixEvaluation) {
  std::mt19937_64 rng(3);
  GrigGroup g(Preset::kFamily);
  for (int i = 0; i < 200; ++i) {
    const std::string w = RandomWord(rng, 16);
    std::set<std::string> got;
    for (const auto& p : ComputeInvertedOrbit(g, w).points) got.insert(p.word);
    EXPECT_EQ(got, BruteOrbit(g, w)) << w;
  }
}

TEST(InvertedOrbitTest, ReductionInvariant) {
  std::mt19937_64 rng(5);
  for (Preset preset : {Preset::kFsa, Preset::kFamily}) {
    GrigGroup g(preset);
    for (int i = 0; i < 200; ++i) {
      const std::string w = RandomWord(rng, 14);
      EXPECT_EQ(ComputeInvertedOrbit(g, w).points,
                ComputeInvertedOrbit(g, ReduceMonoid(w)).points)
          << w;
    }
  }
}

TEST(InvertedOrbitTest, TripleAIsSingleA) {
  std::mt19937_64 rng(13);
  GrigGroup g(Preset::kFamily);
  for (int i = 0; i < 100; ++i) {
    const std::string u = RandomWord(rng, 6), v = RandomWord(rng, 6);
    EXPECT_EQ(ComputeInvertedOrbit(g, u + "aaa" + v).points,
              ComputeInvertedOrbit(g, u + "a" + v).points);
  }
}

TEST(InvertedOrbitTest, CancellingAaChangesOrbit) {
  GrigGroup g(Preset::kFamily);
  EXPECT_EQ(ComputeInvertedOrbit(g, "aa").size(), 2);
  EXPECT_EQ(ComputeInvertedOrbit(g, "").size(), 1);
  EXPECT_EQ(ReduceMonoid("abcaa"), "adaa");
  EXPECT_EQ(ReduceMonoid("bb"), "");
  EXPECT_EQ(ReduceMonoid("cbd"), "");
}

TEST(InvertedOrbitTest, SuffixMonotone) {
  std::mt19937_64 rng(7);
  GrigGroup g(Preset::kFamily);
  for (int i = 0; i < 200; ++i) {
    const std::string u = RandomWord(rng, 8), v = RandomWord(rng, 8);
    EXPECT_GE(ComputeInvertedOrbit(g, u + v).size(),
              ComputeInvertedOrbit(g, v).size());
  }
}

TEST(DeltaSigmaTest, SmallValues) {
  GrigGroup g(Preset::kFamily);
  const auto t = DeltaSigma(g, 12);
  ASSERT_EQ(t.delta.size(), 13u);
  EXPECT_EQ(t.delta[0], 1);
  EXPECT_EQ(t.sigma[0], 1);
  EXPECT_GE(t.delta[6], 3);
  for (int r = 1; r <= 12; ++r) {
    EXPECT_GE(t.delta[r], t.delta[r - 1]);
    EXPECT_LE(t.delta[r], r + 1);
  }
  for (int r = 1; r <= 10; ++r) EXPECT_GT(t.sigma[r], t.sigma[r - 1]);
  EXPECT_EQ(t.delta_max, t.delta[12]);
  EXPECT_EQ(t.sigma_max, t.sigma[12]);
  EXPECT_EQ(ComputeInvertedOrbit(g, t.witness_max).size(), t.delta_max);
}

// Every word of S^* up to length 8, no reduction at all.
std::vector<std::string> AllWords(int max_len) {
  std::vector<std::string> out = {""};
  for (size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_len) continue;
    for (char x : {'a', 'b', 'c', 'd'}) out.push_back(out[i] + x);
  }
  return out;
}

TEST(DeltaSigmaTest, MatchesBruteForce) {
  const auto words = AllWords(8);
  for (Preset preset : {Preset::kFsa, Preset::kFamily}) {
    GrigGroup g(preset);
    const auto t = DeltaSigma(g, 8);
    for (int r = 0; r <= 8; ++r) {
      int delta = 0;
      std::set<std::set<std::string>> sets;
      int64_t count = 0;
      for (const std::string& w : words) {
        if (static_cast<int>(w.size()) > r) continue;
        ++count;
        const auto o = BruteOrbit(g, w);
        delta = std::max(delta, static_cast<int>(o.size()));
        sets.insert(o);
      }
      EXPECT_EQ(t.delta[r], delta) << r;
      EXPECT_EQ(t.sigma[r], static_cast<int64_t>(sets.size())) << r;
      EXPECT_LE(t.sigma[r], count);
      int64_t normal = 0;
      for (const std::string& w : words) {
        normal += static_cast<int>(w.size()) <= r && ReduceMonoid(w) == w;
      }
      EXPECT_LE(t.sigma[r], normal);
    }
  }
}

TEST(DeltaSigmaTest, Limits) {
  GrigGroup g(Preset::kFamily);
  EXPECT_THROW(DeltaSigma(g, 15), ResourceError);
  EnumerationLimits tight;
  tight.max_words = 100;
  EXPECT_THROW(DeltaSigma(g, 10, {}, schreier::Xi(), tight), ResourceError);
  EXPECT_THROW(DeltaSigma(g, -1), DomainError);
  EXPECT_THROW(DeltaSigma(g, 3, {1, 1, 1}), DomainError);
  EXPECT_THROW(DeltaSigma(g, 3, {0, 0, 1, 1}), DomainError);
}

TEST(DeltaSigmaTest, UnitWeightsMatchUnweighted) {
  GrigGroup g(Preset::kFamily);
  const auto a = DeltaSigma(g, 8);
  const auto b = DeltaSigma(g, 8, {1, 1, 1, 1});
  EXPECT_EQ(a.delta_max, b.delta_max);
  EXPECT_EQ(a.sigma_max, b.sigma_max);
}

TEST(DeltaSigmaTest, BasepointRobust) {
  GrigGroup g(Preset::kFamily);
  const schreier::OrbitPoint xi2("0");  // at distance 1 from 1^inf
  const auto a = DeltaSigma(g, 12);
  const auto b = DeltaSigma(g, 12, {}, xi2);
  for (int r = 0; r + 1 <= 12; ++r) EXPECT_LE(a.delta[r], b.delta[r + 1]) << r;
  // The reverse direction needs a larger constant.
  EXPECT_GT(b.delta[3], a.delta[4]);
  for (int r = 0; r + 2 <= 12; ++r) EXPECT_LE(b.delta[r], a.delta[r + 2]) << r;
}

TEST(ZetaTest, Table) {
  EXPECT_EQ(ZetaApply(0, "ab"), "adabac");
  EXPECT_EQ(ZetaApply(0, "ac"), "acac");
  EXPECT_EQ(ZetaApply(1, "ac"), "abacad");
  EXPECT_EQ(ZetaApply(2, "ad"), "acadab");
  EXPECT_EQ(ZetaApply(2, "abad"), "ababacadab");
  EXPECT_EQ(ZetaApply(1, ""), "");
  EXPECT_THROW(ZetaApply(0, "ba"), ParseError);
  EXPECT_THROW(ZetaApply(0, "aba"), ParseError);
  EXPECT_THROW(ZetaApply(3, "ab"), DomainError);
}

TEST(ZetaTest, CountsTransformByTranspose) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const std::string w = RandomSyllables(rng, 10);
    const auto z = SyllableCounts(w);
    for (int x = 0; x < 3; ++x) {
      // Row x of M_x is (1 1 1) and row j != x is 2 e_j.
      std::array<int64_t, 3> want;
      for (int j = 0; j < 3; ++j) want[j] = j == x ? z[x] : z[x] + 2 * z[j];
      EXPECT_EQ(SyllableCounts(ZetaApply(x, w)), want) << w << " " << x;
    }
  }
}

TEST(ZetaTest, InducesHomomorphism) {
  std::mt19937_64 rng(11);
  const OmegaSeq omega = OmegaSeq::Periodic("012");
  GrigGroup g(Preset::kFamily, omega);
  GrigGroup gs(Preset::kFamily, omega.Shift(1));
  const int x = omega.Letter(0);
  for (int i = 0; i < 100; ++i) {
    const std::string s = RandomSyllables(rng, 4);
    const int64_t n = gs.Order(s);
    std::string p;
    for (int64_t j = 0; j < n; ++j) p += s;
    ASSERT_TRUE(gs.IsTrivial(p));
    EXPECT_TRUE(g.IsTrivial(ZetaApply(x, p))) << s;
    EXPECT_EQ(g.Order(ZetaApply(x, s)), n) << s;
    const std::string t = RandomSyllables(rng, 4);
    EXPECT_EQ(gs.Equal(s + t, t + s),
              g.Equal(ZetaApply(x, s + t), ZetaApply(x, t + s)))
        << s << " " << t;
  }
}

TEST(WitnessTest, BaseCase) {
  const auto w = WitnessWord(0);
  const auto norms = metrics::OmegaNorms(OmegaSeq::Periodic("012"), 1);
  EXPECT_EQ(w.word, w.syllable);
  EXPECT_GE(w.orbit_size, 1);
  EXPECT_NEAR(w.weighted_length, norms[0].mu, 1e-12);
}

TEST(WitnessTest, OrbitAndLength) {
  for (int k = 0; k <= 6; ++k) {
    const auto w = WitnessWord(k);
    EXPECT_TRUE(w.orbit_ok) << k;
    EXPECT_TRUE(w.length_ok) << k << " " << w.weighted_length << " vs "
                             << w.predicted;
    EXPECT_GE(w.orbit_size, 1 << k);
  }
  EXPECT_GE(WitnessWord(3).orbit_size, 8);
  EXPECT_THROW(WitnessWord(11), DomainError);
}

TEST(WitnessTest, OtherOmegas) {
  for (const char* spec : {"periodic:0122", "periodic:021",
                           "syllables:(012)^2 2^3 tail=012"}) {
    const OmegaSeq omega = OmegaSeq::Parse(spec);
    for (int k = 0; k <= 5; ++k) {
      const auto w = WitnessWord(k, omega);
      EXPECT_TRUE(w.orbit_ok && w.length_ok) << spec << " k=" << k;
    }
  }
}

TEST(WitnessTest, ConsistentWithWeightedDelta) {
  const OmegaSeq omega = OmegaSeq::Periodic("012");
  GrigGroup g(Preset::kFamily, omega);
  const auto weights = metrics::OmegaNorms(omega, 1)[0].Weights();
  for (int k = 0; k <= 2; ++k) {
    const auto w = WitnessWord(k);
    const auto t = DeltaSigma(g, w.predicted + 1e-9, weights);
    EXPECT_GE(t.delta_max, w.orbit_size) << k;
    EXPECT_GE(t.delta_max, 1 << k);
  }
}

TEST(GrowthWTest, CyclicTwo) {
  const auto rep = GrowthWBoundsCheck(FiniteGroup::Cyclic(2), 3);
  EXPECT_TRUE(rep.pass) << rep.ToJson().dump();
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(rep.rows[1].v_w, 6);
}

TEST(GrowthWTest, CyclicThree) {
  EXPECT_TRUE(GrowthWBoundsCheck(FiniteGroup::Cyclic(3), 2).pass);
}

TEST(GrowthWTest, TrivialGroupCollapses) {
  const auto rep = GrowthWBoundsCheck(FiniteGroup::Trivial(), 3);
  EXPECT_TRUE(rep.pass);
  for (const auto& row : rep.rows) EXPECT_EQ(row.v_w, row.v_g);
}

}  // namespace
}  // namespace invorbit
}  // namespace wreathgrowth

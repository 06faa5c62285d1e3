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

// The Grigorchuk groups G_omega acting on the binary tree: wreath
// recursion, word problem, order, canonical portraits, vertex action and
// the Mealy automaton.

#ifndef WREATHGROWTH_SELFSIM_H_
#define WREATHGROWTH_SELFSIM_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "wreathgrowth/finite_group.h"
#include "wreathgrowth/lru_cache.h"
#include "wreathgrowth/omega.h"

namespace wreathgrowth {
namespace selfsim {

// kFsa: b = <a,c>, c = <a,d>, d = <1,b> for every level.
// kFamily: x = <omega_i(x), x> where omega_i(x) = 1 iff x spans the
// kernel of omega_i (0 <-> b, 1 <-> c, 2 <-> d).
enum class Preset { kFsa, kFamily };

Preset ParsePreset(const std::string& name);
std::string PresetName(Preset p);

// Words are strings over "abcd"; the empty string is the identity.
std::string Reduce(const std::string& w);
bool IsReduced(const std::string& w);
std::string InverseWord(const std::string& w);  // reversal
bool IsGrigWord(const std::string& w);
// All reduced words of length <= max_len, shortest first.
std::vector<std::string> ReducedWords(int max_len);

struct Sections {
  std::string w0, w1;  // reduced
  bool swap = false;
  friend bool operator==(const Sections&, const Sections&) = default;
};

struct Portrait {
  // Leaf: label in {'1','a','b','c','d'}; internal: label == 0.
  char label = '1';
  bool swap = false;
  int shift = 0;
  std::shared_ptr<const Portrait> child[2];

  bool is_leaf() const { return label != 0; }
  int Depth() const;
  nlohmann::json ToJson() const;
};

// Parses the text form produced by GrigGroup::PortraitKey.
std::shared_ptr<const Portrait> ParsePortrait(const std::string& text,
                                              int shift = 0);

struct MealyAutomaton {
  std::vector<std::string> states;       // states[0] is the identity
  std::vector<std::array<int, 2>> next;  // next[state][x]
  std::vector<std::array<int, 2>> out;   // out[state][x]

  int StateIndex(const std::string& name) const;
  bool IsValid() const;
};

struct Reachability {
  // State words are tuples of non-identity state indices.
  std::vector<std::vector<int>> reachable;
  std::vector<std::vector<int>> recurrent;
  bool trivial = false;
};

// All state words reachable from w in the product automaton (identity
// states dropped), the recurrent part, and whether every reachable word
// acts trivially on the first letter.
Reachability ReachabilityAnalysis(const MealyAutomaton& a,
                                  const std::vector<int>& w);

class GrigGroup {
 public:
  static constexpr size_t kDefaultCacheSize = 1 << 20;
  static constexpr int kDefaultMaxDepth = 4096;

  explicit GrigGroup(Preset preset,
                     OmegaSeq omega = OmegaSeq::Periodic("012"),
                     size_t cache_size = kDefaultCacheSize);

  Preset preset() const { return preset_; }
  const OmegaSeq& omega() const { return omega_; }

  // Section of generator x at strand bit, at level shift: "", "a" or a
  // single letter of "bcd".
  const std::string& GenSection(char x, int bit, long long shift) const;

  Sections SectionsOf(const std::string& w, long long shift = 0) const;
  bool IsTrivial(const std::string& w, long long shift = 0) const;
  bool Equal(const std::string& u, const std::string& v,
             long long shift = 0) const;
  // Power of two.
  int64_t Order(const std::string& w, long long shift = 0) const;
  // Canonical text: a leaf letter, or "S(p0 p1)" / "N(p0 p1)".
  std::string PortraitKey(const std::string& w, long long shift = 0) const;
  std::shared_ptr<const Portrait> PortraitOf(const std::string& w,
                                             long long shift = 0) const;

  // v is a binary word with the level-1 letter rightmost.
  std::string ActVertex(const std::string& w, const std::string& v,
                        long long shift = 0) const;
  // Bit k of the index is the level-(k+1) letter.
  Perm LevelPerm(const std::string& w, int level, long long shift = 0) const;

  MealyAutomaton Mealy() const;
  // Generator word as state indices of Mealy() (at shift 0).
  std::vector<int> StateWord(const std::string& w) const;

  void set_max_depth(int d) { max_depth_ = d; }

 private:
  void RequireFaithful() const;
  long long Canon(long long shift) const {
    return preset_ == Preset::kFsa ? 0 : omega_.CanonicalShift(shift);
  }
  bool TrivialRec(const std::string& w, long long shift) const;
  int64_t OrderRec(const std::string& w, long long shift, int depth) const;
  std::string PortraitRec(const std::string& w, long long shift) const;
  std::string GenLeafPattern(char x, long long shift) const;

  Preset preset_;
  OmegaSeq omega_;
  int max_depth_ = kDefaultMaxDepth;
  // sections_[canonical shift][generator 0..3][bit]
  std::vector<std::array<std::array<std::string, 2>, 4>> sections_;
  mutable LruCache<std::string, bool> trivial_cache_;
  mutable LruCache<std::string, int64_t> order_cache_;
  mutable LruCache<std::string, std::string> portrait_cache_;
};

}  // namespace selfsim
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_SELFSIM_H_

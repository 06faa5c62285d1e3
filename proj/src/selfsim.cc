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

#include "wreathgrowth/selfsim.h"

#include <algorithm>
#include <map>
#include <set>

#include "wreathgrowth/errors.h"

namespace wreathgrowth {
namespace selfsim {
namespace {

int GenIndex(char x) {
  switch (x) {
    case 'a': return 0;
    case 'b': return 1;
    case 'c': return 2;
    case 'd': return 3;
  }
  throw DomainError(std::string("not a generator: ") + x);
}

bool IsBcd(char x) { return x == 'b' || x == 'c' || x == 'd'; }

std::string CacheKey(const std::string& w, long long shift) {
  return w + '#' + std::to_string(shift);
}

}  // namespace

Preset ParsePreset(const std::string& name) {
  if (name == "fsa") return Preset::kFsa;
  if (name == "family") return Preset::kFamily;
  throw ParseError("preset must be fsa or family, got " + name);
}

std::string PresetName(Preset p) {
  return p == Preset::kFsa ? "fsa" : "family";
}

bool IsGrigWord(const std::string& w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c >= 'a' && c <= 'd'; });
}

std::string Reduce(const std::string& w) {
  std::string s;
  for (char c : w) {
    if (c == '1') continue;
    if (c < 'a' || c > 'd') throw DomainError("not a word over abcd: " + w);
    if (s.empty()) {
      s.push_back(c);
    } else if (c == 'a' && s.back() == 'a') {
      s.pop_back();
    } else if (IsBcd(c) && IsBcd(s.back())) {
      if (c == s.back()) {
        s.pop_back();
      } else {
        s.back() = static_cast<char>('b' + 'c' + 'd' - c - s.back());
      }
    } else {
      s.push_back(c);
    }
  }
  return s;
}

bool IsReduced(const std::string& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 'a' || w[i] > 'd') return false;
    if (i && ((w[i] == 'a') == (w[i - 1] == 'a'))) return false;
  }
  return true;
}

std::vector<std::string> ReducedWords(int max_len) {
  std::vector<std::string> out = {""};
  for (size_t i = 0; i < out.size(); ++i) {
    const std::string w = out[i];
    if (static_cast<int>(w.size()) >= max_len) continue;
    for (char c : std::string("abcd")) {
      if (!w.empty() && (c == 'a') == (w.back() == 'a')) continue;
      out.push_back(w + c);
    }
  }
  return out;
}

std::string InverseWord(const std::string& w) {
  return std::string(w.rbegin(), w.rend());
}

int Portrait::Depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(child[0]->Depth(), child[1]->Depth());
}

nlohmann::json Portrait::ToJson() const {
  if (is_leaf()) {
    return {{"leaf", std::string(1, label)}, {"shift", shift}};
  }
  return {{"swap", swap},
          {"shift", shift},
          {"children", {child[0]->ToJson(), child[1]->ToJson()}}};
}

namespace {

std::shared_ptr<const Portrait> ParsePortraitAt(const std::string& t,
                                                size_t* pos, int shift) {
  if (*pos >= t.size()) throw ParseError("truncated portrait");
  auto p = std::make_shared<Portrait>();
  p->shift = shift;
  const char c = t[*pos];
  if (c == '1' || (c >= 'a' && c <= 'd')) {
    p->label = c;
    ++*pos;
    return p;
  }
  if ((c != 'S' && c != 'N') || *pos + 1 >= t.size() || t[*pos + 1] != '(') {
    throw ParseError("bad portrait text at " + std::to_string(*pos));
  }
  p->label = 0;
  p->swap = c == 'S';
  *pos += 2;
  p->child[0] = ParsePortraitAt(t, pos, shift + 1);
  if (*pos >= t.size() || t[*pos] != ' ') throw ParseError("expected ' '");
  ++*pos;
  p->child[1] = ParsePortraitAt(t, pos, shift + 1);
  if (*pos >= t.size() || t[*pos] != ')') throw ParseError("expected ')'");
  ++*pos;
  return p;
}

}  // namespace

std::shared_ptr<const Portrait> ParsePortrait(const std::string& text,
                                              int shift) {
  size_t pos = 0;
  auto p = ParsePortraitAt(text, &pos, shift);
  if (pos != text.size()) throw ParseError("trailing portrait text");
  return p;
}

int MealyAutomaton::StateIndex(const std::string& name) const {
  for (size_t i = 0; i < states.size(); ++i) {
    if (states[i] == name) return static_cast<int>(i);
  }
  throw DomainError("unknown automaton state " + name);
}

bool MealyAutomaton::IsValid() const {
  const int n = static_cast<int>(states.size());
  if (next.size() != states.size() || out.size() != states.size()) {
    return false;
  }
  for (int s = 0; s < n; ++s) {
    if (out[s][0] == out[s][1]) return false;
    for (int x = 0; x < 2; ++x) {
      if (next[s][x] < 0 || next[s][x] >= n) return false;
      if (out[s][x] < 0 || out[s][x] > 1) return false;
    }
  }
  return true;
}

Reachability ReachabilityAnalysis(const MealyAutomaton& a,
                                  const std::vector<int>& w) {
  constexpr size_t kMaxWords = 1 << 22;
  auto strip = [](std::vector<int> u) {
    u.erase(std::remove(u.begin(), u.end(), 0), u.end());
    return u;
  };
  // Section of u at x, and the image of x.
  auto step = [&](const std::vector<int>& u, int x, int* image) {
    std::vector<int> s;
    for (int st : u) {
      if (a.next[st][x] != 0) s.push_back(a.next[st][x]);
      x = a.out[st][x];
    }
    *image = x;
    return s;
  };
  Reachability r;
  std::set<std::vector<int>> seen = {strip(w)};
  std::vector<std::vector<int>> queue = {strip(w)};
  r.trivial = true;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int x = 0; x < 2; ++x) {
      int image;
      auto s = step(queue[i], x, &image);
      if (image != x) r.trivial = false;
      if (seen.insert(s).second) {
        queue.push_back(std::move(s));
        if (queue.size() > kMaxWords) {
          throw ResourceError("reachable state-word set too large");
        }
      }
    }
  }
  r.reachable.assign(seen.begin(), seen.end());
  std::set<std::vector<int>> cur = seen;
  while (true) {
    std::set<std::vector<int>> ends;
    for (const auto& u : cur) {
      for (int x = 0; x < 2; ++x) {
        int image;
        ends.insert(step(u, x, &image));
      }
    }
    if (ends == cur) break;
    cur = std::move(ends);
  }
  r.recurrent.assign(cur.begin(), cur.end());
  return r;
}

GrigGroup::GrigGroup(Preset preset, OmegaSeq omega, size_t cache_size)
    : preset_(preset),
      omega_(std::move(omega)),
      trivial_cache_(cache_size),
      order_cache_(cache_size),
      portrait_cache_(cache_size) {
  if (preset_ == Preset::kFsa) {
    sections_.resize(1);
    auto& t = sections_[0];
    t[1] = {"a", "c"};
    t[2] = {"a", "d"};
    t[3] = {"", "b"};
  } else {
    sections_.resize(omega_.NumShiftClasses());
    for (long long k = 0; k < omega_.NumShiftClasses(); ++k) {
      const int l = omega_.Letter(k);
      for (int g = 1; g <= 3; ++g) {
        const char x = static_cast<char>('a' + g);
        sections_[k][g] = {g == l + 1 ? "" : "a", std::string(1, x)};
      }
    }
  }
}

const std::string& GrigGroup::GenSection(char x, int bit,
                                         long long shift) const {
  return sections_[Canon(shift)][GenIndex(x)][bit];
}

Sections GrigGroup::SectionsOf(const std::string& w, long long shift) const {
  Sections s;
  int x0 = 0, x1 = 1;
  for (char c : Reduce(w)) {
    if (c == 'a') {
      x0 ^= 1;
      x1 ^= 1;
      s.swap = !s.swap;
    } else {
      s.w0 += GenSection(c, x0, shift);
      s.w1 += GenSection(c, x1, shift);
    }
  }
  s.w0 = Reduce(s.w0);
  s.w1 = Reduce(s.w1);
  return s;
}

void GrigGroup::RequireFaithful() const {
  if (preset_ == Preset::kFamily && !omega_.InOmegaPrime()) {
    throw UnsupportedInput(
        "omega tail lacks one of 0,1,2: the tree action need not be "
        "faithful");
  }
}

bool GrigGroup::TrivialRec(const std::string& w, long long shift) const {
  if (w.empty()) return true;
  if (w.size() == 1) return false;
  const std::string key = CacheKey(w, Canon(shift));
  if (auto hit = trivial_cache_.Get(key)) return *hit;
  const Sections s = SectionsOf(w, shift);
  const bool r =
      !s.swap && TrivialRec(s.w0, shift + 1) && TrivialRec(s.w1, shift + 1);
  trivial_cache_.Put(key, r);
  return r;
}

bool GrigGroup::IsTrivial(const std::string& w, long long shift) const {
  RequireFaithful();
  return TrivialRec(Reduce(w), shift);
}

bool GrigGroup::Equal(const std::string& u, const std::string& v,
                      long long shift) const {
  return IsTrivial(u + InverseWord(v), shift);
}

int64_t GrigGroup::OrderRec(const std::string& w, long long shift,
                            int depth) const {
  std::string cur = Reduce(w);
  int64_t mult = 1;
  std::set<std::string> chain;
  const std::string top_key = CacheKey(cur, Canon(shift));
  while (true) {
    if (cur.empty()) break;
    if (cur.size() == 1) {
      mult *= 2;
      break;
    }
    if (depth > max_depth_) {
      throw ResourceError("order recursion exceeded depth " +
                          std::to_string(max_depth_));
    }
    const std::string key = CacheKey(cur, Canon(shift));
    if (auto hit = order_cache_.Get(key)) {
      mult *= *hit;
      break;
    }
    if (!chain.insert(key).second) {
      throw ResourceError("order recursion cycles: infinite order");
    }
    const Sections s = SectionsOf(cur, shift);
    if (!s.swap) {
      mult *= std::max(OrderRec(s.w0, shift + 1, depth + 1),
                       OrderRec(s.w1, shift + 1, depth + 1));
      break;
    }
    if (mult > (int64_t{1} << 60)) throw ResourceError("order overflow");
    mult *= 2;
    cur = Reduce(s.w0 + s.w1);
    ++shift;
    ++depth;
  }
  order_cache_.Put(top_key, mult);
  return mult;
}

int64_t GrigGroup::Order(const std::string& w, long long shift) const {
  RequireFaithful();
  return OrderRec(w, shift, 0);
}

std::string GrigGroup::GenLeafPattern(char x, long long shift) const {
  const std::string& s0 = GenSection(x, 0, shift);
  const std::string& s1 = GenSection(x, 1, shift);
  return "N(" + (s0.empty() ? std::string("1") : s0) + " " +
         (s1.empty() ? std::string("1") : s1) + ")";
}

std::string GrigGroup::PortraitRec(const std::string& w,
                                   long long shift) const {
  if (w.empty()) return "1";
  if (w.size() == 1) return w;
  const std::string key = CacheKey(w, Canon(shift));
  if (auto hit = portrait_cache_.Get(key)) return *hit;
  const Sections s = SectionsOf(w, shift);
  const std::string p0 = PortraitRec(s.w0, shift + 1);
  const std::string p1 = PortraitRec(s.w1, shift + 1);
  std::string r;
  if (p0 == "1" && p1 == "1") {
    r = s.swap ? "a" : "1";
  } else {
    r = std::string(s.swap ? "S(" : "N(") + p0 + " " + p1 + ")";
    if (!s.swap) {
      for (char x : {'b', 'c', 'd'}) {
        if (r == GenLeafPattern(x, shift)) r = std::string(1, x);
      }
    }
  }
  portrait_cache_.Put(key, r);
  return r;
}

std::string GrigGroup::PortraitKey(const std::string& w,
                                   long long shift) const {
  RequireFaithful();
  return PortraitRec(Reduce(w), shift);
}

std::shared_ptr<const Portrait> GrigGroup::PortraitOf(const std::string& w,
                                                      long long shift) const {
  return ParsePortrait(PortraitKey(w, shift), static_cast<int>(shift));
}

std::string GrigGroup::ActVertex(const std::string& w, const std::string& v,
                                 long long shift) const {
  std::string r = v;
  for (char g : w) {
    if (g == '1') continue;
    char x = g;
    long long s = shift;
    for (int pos = static_cast<int>(r.size()) - 1; pos >= 0; --pos) {
      if (x == 'a') {
        r[pos] = r[pos] == '0' ? '1' : '0';
        break;
      }
      const int bit = r[pos] - '0';
      if (bit != 0 && bit != 1) throw DomainError("vertex must be binary");
      const std::string& sec = GenSection(x, bit, s);
      if (sec.empty()) break;
      x = sec[0];
      ++s;
    }
  }
  return r;
}

Perm GrigGroup::LevelPerm(const std::string& w, int level,
                          long long shift) const {
  if (level < 0 || level > 22) {
    throw ResourceError("level_perm limited to levels <= 22");
  }
  const uint32_t n = 1u << level;
  std::map<char, Perm> gen;
  for (char g : std::string("abcd")) {
    Perm p(n);
    for (uint32_t v = 0; v < n; ++v) {
      uint32_t r = v;
      char x = g;
      long long s = shift;
      for (int pos = 0; pos < level; ++pos) {
        if (x == 'a') {
          r ^= 1u << pos;
          break;
        }
        const std::string& sec = GenSection(x, (r >> pos) & 1u, s);
        if (sec.empty()) break;
        x = sec[0];
        ++s;
      }
      p[v] = static_cast<int>(r);
    }
    gen[g] = std::move(p);
  }
  Perm p = IdentityPerm(n);
  for (char g : w) {
    if (g == '1') continue;
    p = Compose(p, gen.at(g));
  }
  return p;
}

MealyAutomaton GrigGroup::Mealy() const {
  MealyAutomaton m;
  const long long classes = preset_ == Preset::kFsa ? 1 : omega_.NumShiftClasses();
  m.states = {"1", "a"};
  auto state_name = [&](char x, long long k) {
    return preset_ == Preset::kFsa ? std::string(1, x)
                                   : std::string(1, x) + "@" + std::to_string(k);
  };
  for (long long k = 0; k < classes; ++k) {
    for (char x : {'b', 'c', 'd'}) m.states.push_back(state_name(x, k));
  }
  m.next.assign(m.states.size(), {0, 0});
  m.out.assign(m.states.size(), {0, 1});
  m.out[1] = {1, 0};
  for (long long k = 0; k < classes; ++k) {
    for (char x : {'b', 'c', 'd'}) {
      const int st = m.StateIndex(state_name(x, k));
      for (int bit = 0; bit < 2; ++bit) {
        const std::string& sec = GenSection(x, bit, k);
        if (sec.empty()) {
          m.next[st][bit] = 0;
        } else if (sec == "a") {
          m.next[st][bit] = 1;
        } else {
          m.next[st][bit] = m.StateIndex(state_name(sec[0], Canon(k + 1)));
        }
      }
    }
  }
  return m;
}

std::vector<int> GrigGroup::StateWord(const std::string& w) const {
  const MealyAutomaton m = Mealy();
  std::vector<int> out;
  for (char c : w) {
    if (c == '1') continue;
    if (c == 'a') {
      out.push_back(1);
    } else {
      out.push_back(m.StateIndex(preset_ == Preset::kFsa
                                     ? std::string(1, c)
                                     : std::string(1, c) + "@0"));
    }
  }
  return out;
}

}  // namespace selfsim
}  // namespace wreathgrowth

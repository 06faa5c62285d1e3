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

// Concrete marked groups for the growth engine.

#ifndef WREATHGROWTH_BACKENDS_H_
#define WREATHGROWTH_BACKENDS_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wreathgrowth/finite_group.h"
#include "wreathgrowth/growth.h"
#include "wreathgrowth/selfsim.h"
#include "wreathgrowth/wreath.h"

namespace wreathgrowth {
namespace growth {

// Free product of m1 copies of C2 and m2 copies of Z.  Elements are freely
// reduced words over symbols 0..m1+2m2-1; symbol m1+2j+1 inverts m1+2j.
class FreeLikeBackend {
 public:
  using Element = std::string;
  FreeLikeBackend(int m1, int m2);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int InverseSymbol(int s) const;
  Element Identity() const { return {}; }
  Element Multiply(const Element& u, const Element& v) const;
  Element Invert(const Element& u) const;
  std::string Key(const Element& u) const { return u; }
  const std::vector<Generator<Element>>& generators() const { return gens_; }
  std::string Format(const Element& u) const;

 private:
  int m1_, m2_;
  std::vector<Generator<Element>> gens_;
};

class FiniteBackend {
 public:
  using Element = int;
  explicit FiniteBackend(FiniteGroup g);
  const FiniteGroup& group() const { return g_; }
  Element Identity() const { return 0; }
  Element Multiply(Element u, Element v) const { return g_.mul(u, v); }
  Element Invert(Element u) const { return g_.inv(u); }
  std::string Key(Element u) const { return std::to_string(u); }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  FiniteGroup g_;
  std::vector<Generator<Element>> gens_;
};

// Generators (s, 1) followed by (1, t).
template <MarkedGroupBackend A, MarkedGroupBackend B>
class DirectProductBackend {
 public:
  using Element = std::pair<typename A::Element, typename B::Element>;
  DirectProductBackend(A a, B b) : a_(std::move(a)), b_(std::move(b)) {
    for (const auto& g : a_.generators()) {
      gens_.push_back({g.label + ",1", {g.element, b_.Identity()}, g.weight});
    }
    for (const auto& g : b_.generators()) {
      gens_.push_back({"1," + g.label, {a_.Identity(), g.element}, g.weight});
    }
  }
  Element Identity() const { return {a_.Identity(), b_.Identity()}; }
  Element Multiply(const Element& u, const Element& v) const {
    return {a_.Multiply(u.first, v.first), b_.Multiply(u.second, v.second)};
  }
  Element Invert(const Element& u) const {
    return {a_.Invert(u.first), b_.Invert(u.second)};
  }
  std::string Key(const Element& u) const {
    return a_.Key(u.first) + "|" + b_.Key(u.second);
  }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  A a_;
  B b_;
  std::vector<Generator<Element>> gens_;
};

// Right-angled Coxeter group of a commutation graph on <= 16 vertices.
// Elements are shortlex normal forms over 'a' + vertex.
class RacgBackend {
 public:
  using Element = std::string;
  explicit RacgBackend(std::vector<std::vector<bool>> commute);
  static RacgBackend Path(int n);

  Element Identity() const { return {}; }
  Element Multiply(const Element& u, const Element& v) const;
  Element Invert(const Element& u) const;
  std::string Key(const Element& u) const { return u; }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  Element Normalize(const std::string& reduced) const;
  bool Commute(char x, char y) const { return commute_[x - 'a'][y - 'a']; }

  std::vector<std::vector<bool>> commute_;
  std::vector<Generator<Element>> gens_;
};

// F wr Z with generators c@0 (c a generator of F), s and s^{-1}, or with
// the 2|F| Diestel-Leader generators (c@0)s and s^{-1}(c@0).
class LamplighterBackend {
 public:
  using Element = wreath::LamplighterElement;
  enum class Generators { kStandard, kDiestelLeader };
  explicit LamplighterBackend(FiniteGroup f,
                              Generators gens = Generators::kStandard);
  const wreath::Lamplighter& group() const { return l_; }
  Element Identity() const { return {}; }
  Element Multiply(const Element& u, const Element& v) const {
    return l_.Multiply(u, v);
  }
  Element Invert(const Element& u) const { return l_.Inverse(u); }
  std::string Key(const Element& u) const { return l_.Key(u); }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  wreath::Lamplighter l_;
  std::vector<Generator<Element>> gens_;
};

// H wr G over X = G with the right regular action:
// (f, g)(f', g') = (x -> f(x) f'(x g), g g').  Generators T@1 for the
// generators T of H, then those of G.
template <MarkedGroupBackend GB>
class RegularWreathBackend {
 public:
  struct Element {
    std::map<std::string, std::pair<typename GB::Element, int>> lamps;
    typename GB::Element g;
  };

  RegularWreathBackend(FiniteGroup h, GB g) : h_(std::move(h)), g_(std::move(g)) {
    const auto one = g_.Identity();
    for (int t : h_.generators()) {
      Element e{{}, one};
      e.lamps.emplace(g_.Key(one), std::make_pair(one, t));
      gens_.push_back({h_.name(t) + "@1", std::move(e), 1.0});
    }
    for (const auto& s : g_.generators()) {
      gens_.push_back({s.label, Element{{}, s.element}, s.weight});
    }
  }

  Element Identity() const { return {{}, g_.Identity()}; }
  Element Multiply(const Element& u, const Element& v) const {
    Element r = u;
    const auto ginv = g_.Invert(u.g);
    for (const auto& [key, lamp] : v.lamps) {
      // f'(x g) at x = p g^{-1}.
      auto x = g_.Multiply(lamp.first, ginv);
      const std::string k = g_.Key(x);
      auto it = r.lamps.find(k);
      if (it == r.lamps.end()) {
        r.lamps.emplace(k, std::make_pair(std::move(x), lamp.second));
      } else {
        it->second.second = h_.mul(it->second.second, lamp.second);
        if (it->second.second == h_.identity()) r.lamps.erase(it);
      }
    }
    r.g = g_.Multiply(u.g, v.g);
    return r;
  }
  Element Invert(const Element& u) const {
    Element r{{}, g_.Invert(u.g)};
    for (const auto& [key, lamp] : u.lamps) {
      auto y = g_.Multiply(lamp.first, u.g);
      std::string k = g_.Key(y);
      r.lamps.emplace(std::move(k), std::make_pair(std::move(y), h_.inv(lamp.second)));
    }
    return r;
  }
  std::string Key(const Element& u) const {
    std::string k = g_.Key(u.g) + "|";
    for (const auto& [key, lamp] : u.lamps) {
      k += key + ":" + std::to_string(lamp.second) + ";";
    }
    return k;
  }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  FiniteGroup h_;
  GB g_;
  std::vector<Generator<Element>> gens_;
};

// G_omega with elements stored as reduced words and keyed by portraits.
class GrigBackend {
 public:
  using Element = std::string;
  explicit GrigBackend(const selfsim::GrigGroup& g,
                       std::vector<std::string> gens = {"a", "b", "c", "d"},
                       std::vector<double> weights = {});
  const selfsim::GrigGroup& group() const { return g_; }
  Element Identity() const { return {}; }
  Element Multiply(const Element& u, const Element& v) const {
    return selfsim::Reduce(u + v);
  }
  Element Invert(const Element& u) const { return selfsim::InverseWord(u); }
  std::string Key(const Element& u) const { return g_.PortraitKey(u); }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  const selfsim::GrigGroup& g_;
  std::vector<Generator<Element>> gens_;
};

// H wr_X G for a finite permutation group G on X = {0..degree-1}.
// Generators t@0 for the generators t of H, then the permutations of G.
class FiniteWreathBackend {
 public:
  using Element = wreath::FiniteWreathElement;
  FiniteWreathBackend(FiniteGroup h, int degree, const std::vector<Perm>& g);
  explicit FiniteWreathBackend(const wreath::WreathSpec& spec)
      : FiniteWreathBackend(spec.h, spec.degree, spec.g_generators) {}
  const wreath::FiniteWreath& group() const { return w_; }
  Element Identity() const { return w_.Identity(); }
  Element Multiply(const Element& u, const Element& v) const {
    return w_.Multiply(u, v);
  }
  Element Invert(const Element& u) const { return w_.Inverse(u); }
  std::string Key(const Element& u) const { return w_.ToString(u); }
  const std::vector<Generator<Element>>& generators() const { return gens_; }

 private:
  wreath::FiniteWreath w_;
  std::vector<Generator<Element>> gens_;
};

struct KHillReport {
  int q = 0;
  int k = 0;
  int radius = 0;
  int64_t ball_size = 0;
  int64_t words = 0;          // reduced down-k/up-2k/down-k words
  int64_t expected_words = 0;
  int64_t at_norm = 0;        // ends of norm 4k
  int64_t distinct_ends = 0;
  int64_t tops = 0;           // ends that are k-hill tops
  int64_t higher_tops = 0;    // ends that are (k+1)-hill tops
  int64_t hill_tops_in_ball = 0;

  bool ok() const {
    return words == expected_words && at_norm == words && tops == words &&
           higher_tops == 0;
  }
  nlohmann::json ToJson() const;
};

// In C_q wr Z with the Diestel-Leader generators, every reduced word going
// down k, up 2k and down k ends at norm 4k on top of a k-hill that is not
// a (k+1)-hill.  Uses the ball of radius 5k + 1.
KHillReport LamplighterKHillCheck(int q, int k, int64_t budget = 10'000'000);

}  // namespace growth
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_BACKENDS_H_

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

// Wreath products over finite sets (decorated permutations), the
// Kaloujnine-Krasner embedding, lamplighter groups F wr Z and their
// Diestel-Leader picture.

#ifndef WREATHGROWTH_WREATH_H_
#define WREATHGROWTH_WREATH_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "wreathgrowth/finite_group.h"

namespace wreathgrowth {
namespace wreath {

// perm is a permutation of X = {0..n-1}; labels holds the non-identity
// entries of a map X -> H.
struct FiniteWreathElement {
  Perm perm;
  std::map<int, int> labels;
  int h_order = 1;

  int label(int x) const {
    auto it = labels.find(x);
    return it == labels.end() ? 0 : it->second;
  }
  friend bool operator==(const FiniteWreathElement&,
                         const FiniteWreathElement&) = default;
  friend auto operator<=>(const FiniteWreathElement&,
                          const FiniteWreathElement&) = default;
};

class FiniteWreath {
 public:
  FiniteWreath(FiniteGroup h, int degree);

  const FiniteGroup& h() const { return h_; }
  int degree() const { return degree_; }

  FiniteWreathElement Identity() const;
  FiniteWreathElement Make(Perm perm, const std::vector<int>& labels) const;
  FiniteWreathElement Permutation(Perm perm) const;
  // Identity permutation, label h at x.
  FiniteWreathElement At(int h, int x) const;
  // result.perm = u.perm then v.perm; result(x) = u(x)·v(x·u.perm).
  FiniteWreathElement Multiply(const FiniteWreathElement& u,
                               const FiniteWreathElement& v) const;
  FiniteWreathElement Inverse(const FiniteWreathElement& u) const;
  // g^{-1} u g.
  FiniteWreathElement Conjugate(const FiniteWreathElement& u,
                                const FiniteWreathElement& g) const;
  std::string ToString(const FiniteWreathElement& u) const;

 private:
  void Check(const FiniteWreathElement& u) const;

  FiniteGroup h_;
  int degree_;
};

// Image of E in K wr Sym(H\E).  Coset i is H·transversal[i].
struct KkEmbedding {
  FiniteGroup k;
  int degree = 0;
  std::vector<FiniteWreathElement> images;  // indexed by E-element

  // Exhaustive check of images[a]·images[b] = images[ab].
  bool IsMultiplicative(const FiniteGroup& e) const;
  bool IsInjective() const;
};

// subgroup: elements of H inside E.  f0[i] is the image in K of
// subgroup[i].  transversal: one representative per right coset Ht.
KkEmbedding KkEmbed(const FiniteGroup& e, const std::vector<int>& subgroup,
                    const FiniteGroup& k, const std::vector<int>& f0,
                    const std::vector<int>& transversal);

// lamps holds the non-identity values of a finitely supported Z -> F.
struct LamplighterElement {
  std::map<int64_t, int> lamps;
  int64_t shift = 0;

  friend bool operator==(const LamplighterElement&,
                         const LamplighterElement&) = default;
  friend auto operator<=>(const LamplighterElement&,
                          const LamplighterElement&) = default;
};

class Lamplighter {
 public:
  explicit Lamplighter(FiniteGroup f);

  const FiniteGroup& f() const { return f_; }
  LamplighterElement Identity() const { return {}; }
  LamplighterElement Lamp(int c, int64_t x) const;  // c@x
  LamplighterElement Shift(int64_t k) const;        // s^k
  // (f, m)(f', m') = (x -> f(x) f'(x + m), m + m').
  LamplighterElement Multiply(const LamplighterElement& u,
                              const LamplighterElement& v) const;
  LamplighterElement Inverse(const LamplighterElement& u) const;
  std::string Key(const LamplighterElement& u) const;

  // The 2q generators (c@0)s and s^{-1}(c@0), c in F.
  std::vector<LamplighterElement> DiestelLeaderGenerators() const;

 private:
  FiniteGroup f_;
};

// Vertex of the tree with levels ..., n-1, n: digits are the non-identity
// values of sigma on levels <= height.
struct TreeCoord {
  std::map<int64_t, int> digits;
  int64_t height = 0;

  friend bool operator==(const TreeCoord&, const TreeCoord&) = default;
  friend auto operator<=>(const TreeCoord&, const TreeCoord&) = default;
};

struct DLVertex {
  TreeCoord x, y;  // x.height + y.height == 0

  friend bool operator==(const DLVertex&, const DLVertex&) = default;
  friend auto operator<=>(const DLVertex&, const DLVertex&) = default;
};

TreeCoord TreeParent(const TreeCoord& v);
std::vector<TreeCoord> TreeChildren(const TreeCoord& v, int q);
bool TreeAdjacent(const TreeCoord& u, const TreeCoord& v);

// With cursor p = -shift: x = lamps on (-inf, p] at height p, and
// y(j) = lamps(1 - j) for j <= -p at height -p.
DLVertex ToDiestelLeader(const LamplighterElement& u);
LamplighterElement FromDiestelLeader(const DLVertex& v);

struct DLReport {
  int radius = 0;
  int64_t vertices = 0;
  int64_t edges_checked = 0;
  int64_t mismatches = 0;
  bool injective = true;

  bool ok() const { return mismatches == 0 && injective; }
  nlohmann::json ToJson() const;
};

// Compares the radius-R ball of F wr Z (Diestel-Leader generators) with
// the horocycle product of two (q+1)-regular trees, in both directions.
DLReport DlCheck(int q, int radius);

// "lamplighter:q=<int>"
int ParseLamplighterSpec(const std::string& spec);

struct WreathSpec {
  FiniteGroup h;
  int degree = 0;
  std::vector<Perm> g_generators;
};
// "wreath:H=<group>,X=<int>,G=<cycles>;<cycles>;..."
WreathSpec ParseWreathSpec(const std::string& spec);

}  // namespace wreath
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_WREATH_H_

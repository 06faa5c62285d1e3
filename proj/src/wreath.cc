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

#include "wreathgrowth/wreath.h"

#include <deque>
#include <set>
#include <sstream>

#include "wreathgrowth/errors.h"

namespace wreathgrowth {
namespace wreath {

FiniteWreath::FiniteWreath(FiniteGroup h, int degree)
    : h_(std::move(h)), degree_(degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
}

void FiniteWreath::Check(const FiniteWreathElement& u) const {
  if (static_cast<int>(u.perm.size()) != degree_ || u.h_order != h_.order()) {
    throw DomainError("wreath element over a different X or H");
  }
}

FiniteWreathElement FiniteWreath::Identity() const {
  return {IdentityPerm(degree_), {}, h_.order()};
}

FiniteWreathElement FiniteWreath::Make(Perm perm,
                                       const std::vector<int>& labels) const {
  if (static_cast<int>(perm.size()) != degree_ || !IsPermutation(perm)) {
    throw DomainError("not a permutation of X");
  }
  FiniteWreathElement u{std::move(perm), {}, h_.order()};
  for (int x = 0; x < static_cast<int>(labels.size()); ++x) {
    if (labels[x] < 0 || labels[x] >= h_.order()) {
      throw DomainError("label outside H");
    }
    if (labels[x] != 0) u.labels[x] = labels[x];
  }
  return u;
}

FiniteWreathElement FiniteWreath::Permutation(Perm perm) const {
  return Make(std::move(perm), {});
}

FiniteWreathElement FiniteWreath::At(int h, int x) const {
  if (x < 0 || x >= degree_) throw DomainError("point outside X");
  FiniteWreathElement u = Identity();
  if (h != 0) u.labels[x] = h;
  return u;
}

FiniteWreathElement FiniteWreath::Multiply(const FiniteWreathElement& u,
                                           const FiniteWreathElement& v) const {
  Check(u);
  Check(v);
  FiniteWreathElement r{Compose(u.perm, v.perm), {}, h_.order()};
  for (int x = 0; x < degree_; ++x) {
    const int l = h_.mul(u.label(x), v.label(u.perm[x]));
    if (l != 0) r.labels[x] = l;
  }
  return r;
}

FiniteWreathElement FiniteWreath::Inverse(const FiniteWreathElement& u) const {
  Check(u);
  FiniteWreathElement r{InversePerm(u.perm), {}, h_.order()};
  // r(y) = u(y·u^{-1})^{-1}
  for (const auto& [x, h] : u.labels) r.labels[u.perm[x]] = h_.inv(h);
  return r;
}

FiniteWreathElement FiniteWreath::Conjugate(
    const FiniteWreathElement& u, const FiniteWreathElement& g) const {
  return Multiply(Multiply(Inverse(g), u), g);
}

std::string FiniteWreath::ToString(const FiniteWreathElement& u) const {
  std::ostringstream os;
  for (int x = 0; x < degree_; ++x) {
    os << (x ? " " : "") << x << "->" << u.perm[x] << ':' << h_.name(u.label(x));
  }
  return os.str();
}

bool KkEmbedding::IsMultiplicative(const FiniteGroup& e) const {
  FiniteWreath w(k, degree);
  for (int a = 0; a < e.order(); ++a) {
    for (int b = 0; b < e.order(); ++b) {
      if (w.Multiply(images[a], images[b]) != images[e.mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

bool KkEmbedding::IsInjective() const {
  std::set<FiniteWreathElement> seen(images.begin(), images.end());
  return seen.size() == images.size();
}

KkEmbedding KkEmbed(const FiniteGroup& e, const std::vector<int>& subgroup,
                    const FiniteGroup& k, const std::vector<int>& f0,
                    const std::vector<int>& transversal) {
  const int n = e.order();
  if (f0.size() != subgroup.size()) {
    throw DomainError("f0 must give one image per subgroup element");
  }
  std::vector<int> pos_in_h(n, -1);
  for (size_t i = 0; i < subgroup.size(); ++i) {
    if (subgroup[i] < 0 || subgroup[i] >= n || pos_in_h[subgroup[i]] >= 0) {
      throw DomainError("invalid subgroup element list");
    }
    pos_in_h[subgroup[i]] = static_cast<int>(i);
  }
  for (int a : subgroup) {
    for (int b : subgroup) {
      if (pos_in_h[e.mul(a, b)] < 0) {
        throw DomainError("subgroup is not closed under multiplication");
      }
    }
  }
  for (int v : f0) {
    if (v < 0 || v >= k.order()) throw DomainError("f0 image outside K");
  }
  for (int a : subgroup) {
    for (int b : subgroup) {
      if (k.mul(f0[pos_in_h[a]], f0[pos_in_h[b]]) !=
          f0[pos_in_h[e.mul(a, b)]]) {
        throw ContractViolation("f0 is not a homomorphism");
      }
    }
  }
  // coset_of[e] = index of the transversal element t with e in Ht.
  std::vector<int> coset_of(n, -1);
  for (size_t i = 0; i < transversal.size(); ++i) {
    for (int h : subgroup) {
      const int x = e.mul(h, transversal[i]);
      if (coset_of[x] >= 0) {
        throw DomainError("invalid transversal: cosets overlap");
      }
      coset_of[x] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] < 0) throw DomainError("invalid transversal: not covering");
  }
  const int d = static_cast<int>(transversal.size());
  KkEmbedding out{k, d, {}};
  FiniteWreath w(k, d);
  for (int g = 0; g < n; ++g) {
    Perm perm(d);
    std::vector<int> labels(d);
    for (int i = 0; i < d; ++i) {
      const int tg = e.mul(transversal[i], g);
      const int j = coset_of[tg];
      perm[i] = j;
      labels[i] = f0[pos_in_h[e.mul(tg, e.inv(transversal[j]))]];
    }
    out.images.push_back(w.Make(std::move(perm), labels));
  }
  return out;
}

Lamplighter::Lamplighter(FiniteGroup f) : f_(std::move(f)) {}

LamplighterElement Lamplighter::Lamp(int c, int64_t x) const {
  LamplighterElement u;
  if (c != 0) u.lamps[x] = c;
  return u;
}

LamplighterElement Lamplighter::Shift(int64_t k) const {
  LamplighterElement u;
  u.shift = k;
  return u;
}

LamplighterElement Lamplighter::Multiply(const LamplighterElement& u,
                                         const LamplighterElement& v) const {
  LamplighterElement r = u;
  r.shift = u.shift + v.shift;
  // v's lamp at y lands at x = y - u.shift.
  for (const auto& [y, c] : v.lamps) {
    const int64_t x = y - u.shift;
    auto it = r.lamps.find(x);
    const int l = f_.mul(it == r.lamps.end() ? 0 : it->second, c);
    if (l == 0) {
      if (it != r.lamps.end()) r.lamps.erase(it);
    } else {
      r.lamps[x] = l;
    }
  }
  return r;
}

LamplighterElement Lamplighter::Inverse(const LamplighterElement& u) const {
  LamplighterElement r;
  r.shift = -u.shift;
  for (const auto& [x, c] : u.lamps) r.lamps[x + u.shift] = f_.inv(c);
  return r;
}

std::string Lamplighter::Key(const LamplighterElement& u) const {
  std::string s = std::to_string(u.shift);
  for (const auto& [x, c] : u.lamps) {
    s += ';' + std::to_string(x) + ':' + std::to_string(c);
  }
  return s;
}

std::vector<LamplighterElement> Lamplighter::DiestelLeaderGenerators() const {
  std::vector<LamplighterElement> gens;
  for (int c = 0; c < f_.order(); ++c) {
    gens.push_back(Multiply(Lamp(c, 0), Shift(1)));
  }
  for (int c = 0; c < f_.order(); ++c) {
    gens.push_back(Multiply(Shift(-1), Lamp(c, 0)));
  }
  return gens;
}

TreeCoord TreeParent(const TreeCoord& v) {
  TreeCoord p{v.digits, v.height - 1};
  p.digits.erase(v.height);
  return p;
}

std::vector<TreeCoord> TreeChildren(const TreeCoord& v, int q) {
  std::vector<TreeCoord> out;
  for (int c = 0; c < q; ++c) {
    TreeCoord ch{v.digits, v.height + 1};
    if (c != 0) ch.digits[v.height + 1] = c;
    out.push_back(std::move(ch));
  }
  return out;
}

bool TreeAdjacent(const TreeCoord& u, const TreeCoord& v) {
  return TreeParent(u) == v || TreeParent(v) == u;
}

DLVertex ToDiestelLeader(const LamplighterElement& u) {
  const int64_t p = -u.shift;
  DLVertex v;
  v.x.height = p;
  v.y.height = -p;
  for (const auto& [k, c] : u.lamps) {
    if (k <= p) {
      v.x.digits[k] = c;
    } else {
      v.y.digits[1 - k] = c;
    }
  }
  return v;
}

LamplighterElement FromDiestelLeader(const DLVertex& v) {
  if (v.x.height + v.y.height != 0) {
    throw DomainError("Diestel-Leader heights must sum to zero");
  }
  LamplighterElement u;
  const int64_t p = v.x.height;
  u.shift = -p;
  for (const auto& [k, c] : v.x.digits) {
    if (k > p) throw DomainError("digit above the vertex height");
    u.lamps[k] = c;
  }
  for (const auto& [j, c] : v.y.digits) {
    if (j > v.y.height) throw DomainError("digit above the vertex height");
    u.lamps[1 - j] = c;
  }
  return u;
}

nlohmann::json DLReport::ToJson() const {
  return {{"radius", radius},
          {"vertices", vertices},
          {"edges_checked", edges_checked},
          {"mismatches", mismatches},
          {"injective", injective}};
}

DLReport DlCheck(int q, int radius) {
  if (q < 2) throw DomainError("dl_check needs q >= 2");
  if (radius < 0) throw DomainError("radius must be non-negative");
  if (radius > 12) throw ResourceError("dl_check radius limited to 12");
  Lamplighter g(FiniteGroup::Cyclic(q));
  const auto gens = g.DiestelLeaderGenerators();
  std::map<LamplighterElement, int> dist = {{g.Identity(), 0}};
  std::deque<LamplighterElement> queue = {g.Identity()};
  while (!queue.empty()) {
    LamplighterElement u = queue.front();
    queue.pop_front();
    const int d = dist[u];
    if (d == radius) continue;
    for (const auto& s : gens) {
      LamplighterElement w = g.Multiply(u, s);
      if (dist.emplace(w, d + 1).second) queue.push_back(std::move(w));
    }
  }
  DLReport rep;
  rep.radius = radius;
  rep.vertices = static_cast<int64_t>(dist.size());
  std::set<DLVertex> images;
  for (const auto& [u, d] : dist) {
    const DLVertex v = ToDiestelLeader(u);
    images.insert(v);
    if (FromDiestelLeader(v) != u) ++rep.mismatches;
    // Cayley edges are horocycle-product edges.
    std::set<LamplighterElement> cayley;
    for (const auto& s : gens) {
      const LamplighterElement w = g.Multiply(u, s);
      cayley.insert(w);
      const DLVertex vw = ToDiestelLeader(w);
      ++rep.edges_checked;
      const bool x_up = vw.x == TreeParent(v.x) && TreeParent(vw.y) == v.y;
      const bool y_up = vw.y == TreeParent(v.y) && TreeParent(vw.x) == v.x;
      if (!(x_up || y_up)) ++rep.mismatches;
    }
    // Horocycle-product neighbours, recomputed in tree coordinates, are
    // Cayley neighbours.
    std::vector<DLVertex> nbrs;
    for (const auto& c : TreeChildren(v.y, q)) {
      nbrs.push_back({TreeParent(v.x), c});
    }
    for (const auto& c : TreeChildren(v.x, q)) {
      nbrs.push_back({c, TreeParent(v.y)});
    }
    for (const auto& nb : nbrs) {
      ++rep.edges_checked;
      if (!cayley.count(FromDiestelLeader(nb))) ++rep.mismatches;
    }
    if (cayley.size() != gens.size()) ++rep.mismatches;
  }
  rep.injective = images.size() == dist.size();
  return rep;
}

int ParseLamplighterSpec(const std::string& spec) {
  const std::string prefix = "lamplighter:q=";
  if (spec.rfind(prefix, 0) != 0) throw ParseError("expected " + prefix);
  try {
    size_t used = 0;
    const int q = std::stoi(spec.substr(prefix.size()), &used);
    if (used + prefix.size() != spec.size() || q < 2) throw ParseError("");
    return q;
  } catch (const std::exception&) {
    throw ParseError("bad lamplighter spec: " + spec);
  }
}

WreathSpec ParseWreathSpec(const std::string& spec) {
  const std::string prefix = "wreath:";
  if (spec.rfind(prefix, 0) != 0) throw ParseError("expected " + prefix);
  std::map<std::string, std::string> kv;
  std::string rest = spec.substr(prefix.size());
  // Keys are H, X, G; G comes last and may contain commas inside cycles.
  for (const std::string key : {"H=", "X=", "G="}) {
    const size_t at = rest.find(key);
    if (at == std::string::npos) throw ParseError("missing " + key);
    size_t end = std::string::npos;
    if (key != "G=") end = rest.find(',', at);
    kv[key] = rest.substr(at + 2, end == std::string::npos
                                      ? std::string::npos
                                      : end - at - 2);
  }
  WreathSpec out;
  out.h = FiniteGroup::Parse(kv["H="]);
  try {
    out.degree = std::stoi(kv["X="]);
  } catch (const std::exception&) {
    throw ParseError("bad X in wreath spec");
  }
  if (out.degree < 1) throw ParseError("X must be positive");
  std::string g = kv["G="];
  size_t start = 0;
  while (start <= g.size()) {
    size_t semi = g.find(';', start);
    std::string part = g.substr(start, semi == std::string::npos
                                           ? std::string::npos
                                           : semi - start);
    if (!part.empty()) out.g_generators.push_back(ParseCycles(part, out.degree));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace wreath
}  // namespace wreathgrowth

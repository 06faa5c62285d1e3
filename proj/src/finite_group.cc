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

#include "wreathgrowth/finite_group.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "wreathgrowth/errors.h"

namespace wreathgrowth {

Perm IdentityPerm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm Compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw DomainError("permutation size mismatch");
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

Perm InversePerm(const Perm& p) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

bool IsPermutation(const Perm& p) {
  std::vector<bool> seen(p.size());
  for (int y : p) {
    if (y < 0 || y >= static_cast<int>(p.size()) || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

Perm ParseCycles(const std::string& text, int n) {
  Perm p = IdentityPerm(n);
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle: " + text);
    const size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unclosed cycle: " + text);
    std::istringstream is(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (is >> tok) {
      for (char& c : tok) {
        if (c == ',') c = ' ';
      }
      std::istringstream ts(tok);
      int v;
      while (ts >> v) {
        if (v < 1 || v > n) throw ParseError("cycle point out of range");
        cyc.push_back(v - 1);
      }
    }
    Perm c = IdentityPerm(n);
    for (size_t k = 0; k < cyc.size(); ++k) {
      c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    if (!IsPermutation(c)) throw ParseError("repeated point in cycle");
    p = Compose(p, c);
    i = close + 1;
  }
  return p;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  if (n == 0 || n > kMaxOrder) throw DomainError("bad finite group order");
  if (static_cast<int>(names_.size()) != n) names_.resize(n);
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) {
      throw DomainError("multiplication table is not square");
    }
    if (table_[0][a] != a || table_[a][0] != a) {
      throw DomainError("element 0 is not the identity");
    }
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) inverse_[a] = b;
    }
    if (inverse_[a] < 0) throw DomainError("element without inverse");
  }
  for (int a = 1; a < n; ++a) generators_.push_back(a);
}

FiniteGroup FiniteGroup::Trivial() {
  FiniteGroup g(std::vector<std::vector<int>>{{0}}, {"1"});
  return g;
}

FiniteGroup FiniteGroup::Cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  FiniteGroup g(std::move(t), std::move(names));
  if (n == 2) g.generators_ = {1};
  if (n > 2) g.generators_ = {1, n - 1};
  return g;
}

FiniteGroup FiniteGroup::Product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  if (na * nb > kMaxOrder) throw DomainError("product group too large");
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> names(na * nb);
  for (int x = 0; x < na * nb; ++x) {
    const int x1 = x / nb, x2 = x % nb;
    names[x] = "(" + a.name(x1) + "," + b.name(x2) + ")";
    for (int y = 0; y < na * nb; ++y) {
      t[x][y] = a.mul(x1, y / nb) * nb + b.mul(x2, y % nb);
    }
  }
  FiniteGroup g(std::move(t), std::move(names));
  g.generators_.clear();
  for (int s : a.generators()) g.generators_.push_back(s * nb);
  for (int s : b.generators()) g.generators_.push_back(s);
  return g;
}

FiniteGroup FiniteGroup::FromPermutations(const std::vector<Perm>& gens,
                                          std::vector<Perm>* elements) {
  const int n = gens.empty() ? 0 : static_cast<int>(gens[0].size());
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n || !IsPermutation(g)) {
      throw DomainError("generators must be permutations of one set");
    }
  }
  std::vector<Perm> elts = {IdentityPerm(n)};
  std::map<Perm, int> index = {{elts[0], 0}};
  for (size_t i = 0; i < elts.size(); ++i) {
    for (const auto& g : gens) {
      Perm p = Compose(elts[i], g);
      if (index.emplace(p, static_cast<int>(elts.size())).second) {
        elts.push_back(std::move(p));
        if (static_cast<int>(elts.size()) > kMaxOrder) {
          throw DomainError("permutation group exceeds order limit");
        }
      }
    }
  }
  const int m = static_cast<int>(elts.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    std::ostringstream os;
    os << '[';
    for (int x = 0; x < n; ++x) os << (x ? " " : "") << elts[a][x] + 1;
    os << ']';
    names[a] = os.str();
    for (int b = 0; b < m; ++b) t[a][b] = index.at(Compose(elts[a], elts[b]));
  }
  FiniteGroup g(std::move(t), std::move(names));
  g.generators_.clear();
  for (const auto& s : gens) g.generators_.push_back(index.at(s));
  if (elements) *elements = std::move(elts);
  return g;
}

FiniteGroup FiniteGroup::Symmetric(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Perm p = IdentityPerm(n);
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  if (gens.empty()) return Trivial();
  return FromPermutations(gens);
}

FiniteGroup FiniteGroup::Dihedral(int n) {
  if (n < 1) throw DomainError("dihedral parameter must be positive");
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  if (n <= 2) {
    // D1 = C2, D2 = Klein four group; realised on 2n points.
    return n == 1 ? Cyclic(2) : Product(Cyclic(2), Cyclic(2));
  }
  return FromPermutations({r, s});
}

FiniteGroup FiniteGroup::Parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == 'x' || c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  FiniteGroup g = Trivial();
  bool first = true;
  for (const auto& p : parts) {
    FiniteGroup f = Trivial();
    if (p == "trivial" || p == "1") {
      f = Trivial();
    } else if (p.size() >= 2 && (p[0] == 'C' || p[0] == 'S' || p[0] == 'D')) {
      int k = 0;
      try {
        size_t used = 0;
        k = std::stoi(p.substr(1), &used);
        if (used != p.size() - 1) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad finite group spec: " + spec);
      }
      if (k < 1) throw ParseError("bad finite group spec: " + spec);
      f = p[0] == 'C' ? Cyclic(k) : (p[0] == 'S' ? Symmetric(k) : Dihedral(k));
    } else {
      throw ParseError("bad finite group spec: " + spec);
    }
    g = first ? f : Product(g, f);
    first = false;
  }
  return g;
}

int FiniteGroup::ElementOrder(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

}  // namespace wreathgrowth

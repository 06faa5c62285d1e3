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

#include "wreathgrowth/series.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "wreathgrowth/errors.h"

namespace wreathgrowth {
namespace series {

Series::Series(int order) : coeffs_(std::max(order, 0) + 1) {}

Series::Series(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(std::max(order, 0) + 1);
}

Series Series::Constant(int order, const Rational& c) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::Z(int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Series Series::FromInts(int order, const std::vector<int64_t>& c) {
  Series s(order);
  for (int i = 0; i <= order && i < static_cast<int>(c.size()); ++i) {
    s.coeffs_[i] = c[i];
  }
  return s;
}

Series Series::Truncate(int order) const {
  return Series(order, std::vector<Rational>(
                           coeffs_.begin(),
                           coeffs_.begin() + std::min<size_t>(
                                                 coeffs_.size(), order + 1)));
}

Series Series::Shift(int k) const {
  Series r(order());
  for (int i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (int i = 0; i <= order(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (int i = 0; i <= order(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Series& o) {
  const int n = std::min(order(), o.order());
  std::vector<Rational> r(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(r);
  return *this;
}

Series operator*(const Rational& c, Series a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

Series Series::Inverse() const {
  if (coeffs_[0] == 0) {
    throw DomainError("series inverse needs a non-zero constant term");
  }
  Series r(order());
  r.coeffs_[0] = 1 / coeffs_[0];
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
    r.coeffs_[n] = -acc * r.coeffs_[0];
  }
  return r;
}

Series Series::Pow(int e) const {
  if (e < 0) return Inverse().Pow(-e);
  Series r = Constant(order(), 1);
  Series b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool Series::IsIntegral() const {
  for (const auto& c : coeffs_) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

std::vector<BigInt> Series::IntegerCoeffs() const {
  std::vector<BigInt> out;
  for (const auto& c : coeffs_) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw DomainError("series has a non-integral coefficient");
    }
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

std::string Series::ToString() const {
  std::ostringstream os;
  for (int i = 0; i <= order(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  return os.str();
}

Series Star(const Series& f) {
  if (f[0] != 0) throw DomainError("star needs F(0) = 0");
  return (Series::Constant(f.order(), 1) - f).Inverse();
}

Series FreeLike(int m1, int m2, int order) {
  const int m = m1 + 2 * m2;
  if (m1 < 0 || m2 < 0 || m < 1) {
    throw DomainError("free-like group needs m1 + 2 m2 >= 1");
  }
  Series num = Series::FromInts(order, {1, 0, -1});
  Series den = Series::FromInts(order, {1, -m, m - 1});
  return num * den.Inverse();
}

Series DirectProduct(const Series& a, const Series& b) { return a * b; }

namespace {
void RequireUnit(const Series& s, const char* what) {
  if (s[0] != 1) throw DomainError(std::string(what) + ": need G(0) = 1");
}
}  // namespace

Series FreeProduct(const Series& a, const Series& b) {
  RequireUnit(a, "free product");
  RequireUnit(b, "free product");
  const int n = std::min(a.order(), b.order());
  Series inv = a.Truncate(n).Inverse() + b.Truncate(n).Inverse() -
               Series::Constant(n, 1);
  return inv.Inverse();
}

Series GraphProduct(const std::vector<std::vector<bool>>& adjacency,
                    const std::vector<Series>& factors) {
  const int k = static_cast<int>(factors.size());
  if (k > 16) throw ResourceError("graph product limited to 16 vertices");
  if (static_cast<int>(adjacency.size()) != k) {
    throw DomainError("adjacency size does not match factor count");
  }
  if (k == 0) return Series::Constant(0, 1);
  int n = factors[0].order();
  for (const auto& f : factors) {
    RequireUnit(f, "graph product");
    n = std::min(n, f.order());
  }
  std::vector<Series> d;
  for (const auto& f : factors) {
    d.push_back(f.Truncate(n).Inverse() - Series::Constant(n, 1));
  }
  Series total = Series::Constant(n, 1);
  // Cliques grown in increasing vertex order; each visited once.
  std::vector<std::pair<std::vector<int>, Series>> stack;
  stack.push_back({{}, Series::Constant(n, 1)});
  while (!stack.empty()) {
    auto [clique, prod] = std::move(stack.back());
    stack.pop_back();
    const int start = clique.empty() ? 0 : clique.back() + 1;
    for (int v = start; v < k; ++v) {
      bool ok = true;
      for (int u : clique) ok = ok && adjacency[u][v] && adjacency[v][u];
      if (!ok) continue;
      auto next = clique;
      next.push_back(v);
      Series p = prod * d[v];
      total += p;
      stack.push_back({std::move(next), std::move(p)});
    }
  }
  return total.Inverse();
}

Series FiniteXWreath(const Series& gamma_h, const Series& gamma_g, int d) {
  if (d < 0) throw DomainError("|X| must be non-negative");
  return gamma_h.Pow(d) * gamma_g;
}

namespace {

void ParryPre(const Series& gamma_h, int m1, int m2) {
  RequireUnit(gamma_h, "wreath series");
  if (m1 < 0 || m2 < 0 || m1 + 2 * m2 < 1) {
    throw DomainError("free-like group needs m1 + 2 m2 >= 1");
  }
}

// Iterates x <- step(x) from x0 until the truncation stabilises.
template <typename T, typename Step>
T Stabilise(T x, int order, Step step) {
  for (int it = 0; it <= order + 1; ++it) {
    T next = step(x);
    if (next == x) return x;
    x = std::move(next);
  }
  if (step(x) == x) return x;
  throw std::logic_error("z-adic iteration did not stabilise");
}

}  // namespace

Series ParryWreath(const Series& gamma_h, int m1, int m2, int order) {
  ParryPre(gamma_h, m1, m2);
  const int m = m1 + 2 * m2;
  const Series one = Series::Constant(order, 1);
  const Series x = gamma_h.Truncate(order);
  const Series y = x - one;
  const Series z = Series::Z(order);
  // Excursion into one branch and back.
  Series e = Stabilise(one, order, [&](const Series& e) {
    return one + (y + x * (e.Pow(m - 1) - one)).Shift(2);
  });
  const Series& d = e;
  // Path leaving through one edge, without the edge's own z.
  Series f = Stabilise(one, order, [&](const Series& f) {
    Series inner = d.Pow(m - 1);
    if (m >= 2) inner += Rational(m - 1) * (d.Pow(m - 2) * f).Shift(1);
    return x * inner;
  });
  return x * (d.Pow(m) + Rational(m) * (d.Pow(m - 1) * f).Shift(1));
}

Series ParryWreathPerSymbol(const Series& gamma_h, int m1, int m2,
                            int order) {
  ParryPre(gamma_h, m1, m2);
  const int m = m1 + 2 * m2;
  // Symbols 0..m1-1 are involutions; m1+2i, m1+2i+1 are mutually inverse.
  std::vector<int> inv(m);
  for (int s = 0; s < m1; ++s) inv[s] = s;
  for (int i = 0; i < m2; ++i) {
    inv[m1 + 2 * i] = m1 + 2 * i + 1;
    inv[m1 + 2 * i + 1] = m1 + 2 * i;
  }
  const Series one = Series::Constant(order, 1);
  const Series x = gamma_h.Truncate(order);
  const Series y = x - one;
  using Vec = std::vector<Series>;
  // Product of e[t] over t != excluded (and t != skip).
  auto prod_except = [&](const Vec& e, int excluded, int skip) {
    Series p = one;
    for (int t = 0; t < m; ++t) {
      if (t != excluded && t != skip) p *= e[t];
    }
    return p;
  };
  Vec e = Stabilise(Vec(m, one), order, [&](const Vec& e) {
    Vec next(m);
    for (int s = 0; s < m; ++s) {
      next[s] = one + (y + x * (prod_except(e, inv[s], -1) - one)).Shift(2);
    }
    return next;
  });
  Vec f = Stabilise(Vec(m, one), order, [&](const Vec& f) {
    Vec next(m);
    for (int s = 0; s < m; ++s) {
      Series inner = prod_except(e, inv[s], -1);
      for (int t = 0; t < m; ++t) {
        if (t == inv[s]) continue;
        inner += (f[t] * prod_except(e, inv[s], t)).Shift(1);
      }
      next[s] = x * inner;
    }
    return next;
  });
  Series inner = prod_except(e, -1, -1);
  for (int s = 0; s < m; ++s) {
    inner += (f[s] * prod_except(e, -1, s)).Shift(1);
  }
  return x * inner;
}

}  // namespace series
}  // namespace wreathgrowth

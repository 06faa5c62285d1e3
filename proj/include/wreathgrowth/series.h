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

// Truncated power series with exact rational coefficients, and the growth
// series combinators built on top of them.

#ifndef WREATHGROWTH_SERIES_H_
#define WREATHGROWTH_SERIES_H_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreathgrowth {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace series {

// Coefficients 0..order(); everything beyond is unknown and dropped.
class Series {
 public:
  Series() : coeffs_(1) {}
  explicit Series(int order);
  Series(int order, std::vector<Rational> coeffs);
  static Series Constant(int order, const Rational& c);
  static Series Z(int order);  // the monomial z
  static Series FromInts(int order, const std::vector<int64_t>& c);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_[i]; }
  Rational& operator[](int i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Series Truncate(int order) const;
  // Multiplication by z^k.
  Series Shift(int k) const;
  Series Inverse() const;
  Series Pow(int e) const;
  bool IsIntegral() const;
  std::vector<BigInt> IntegerCoeffs() const;
  std::string ToString() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(const Rational& c, Series a);
  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// (1 - F)^{-1}.  Requires F(0) = 0.
Series Star(const Series& f);

// Ball series of a free product of m1 copies of C2 and m2 copies of Z with
// the natural generators: (1 - z^2) / (1 - m z + (m-1) z^2), m = m1 + 2 m2.
Series FreeLike(int m1, int m2, int order);

Series DirectProduct(const Series& a, const Series& b);

// 1/G = 1/A + 1/B - 1.
Series FreeProduct(const Series& a, const Series& b);

// Graph product: 1/G = sum over cliques W of prod_{v in W} (1/G_v - 1).
// adjacency[i][j] true means factors i and j commute.
Series GraphProduct(const std::vector<std::vector<bool>>& adjacency,
                    const std::vector<Series>& factors);

// Gamma_H^d * Gamma_G.
Series FiniteXWreath(const Series& gamma_h, const Series& gamma_g, int d);

// Wreath product H wr G with G free-like (m1 copies of C2, m2 of Z), with
// generators T@1 and the natural generators of G.  Solves the augmented
// Eulerian-path system in the collapsed single-unknown form.
Series ParryWreath(const Series& gamma_h, int m1, int m2, int order);

// Same system, one unknown pair (E_s, F_s) per generator symbol s, with
// the backtrack exclusion t != s^{-1} applied symbol by symbol.
Series ParryWreathPerSymbol(const Series& gamma_h, int m1, int m2, int order);

}  // namespace series
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_SERIES_H_

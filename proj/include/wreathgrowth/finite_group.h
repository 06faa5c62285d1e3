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

// Permutations acting on the right, and finite groups given by their
// multiplication tables.

#ifndef WREATHGROWTH_FINITE_GROUP_H_
#define WREATHGROWTH_FINITE_GROUP_H_

#include <string>
#include <vector>

namespace wreathgrowth {

// p[x] is the image x·p.  Compose(p, q) is "first p, then q".
using Perm = std::vector<int>;

Perm IdentityPerm(int n);
Perm Compose(const Perm& p, const Perm& q);
Perm InversePerm(const Perm& p);
bool IsPermutation(const Perm& p);
// Parses cycle notation on points 1..n, e.g. "(1 2)(3 4)"; "()" is the
// identity.  Points are returned 0-based.
Perm ParseCycles(const std::string& text, int n);

class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 5000;

  FiniteGroup() : FiniteGroup(Trivial()) {}
  // table[i][j] = i·j; element 0 must be the identity.
  FiniteGroup(std::vector<std::vector<int>> table,
              std::vector<std::string> names);

  static FiniteGroup Trivial();
  static FiniteGroup Cyclic(int n);
  static FiniteGroup Product(const FiniteGroup& a, const FiniteGroup& b);
  // Closure of permutation generators on n points; element names are the
  // images in one-line notation.  Also returns the permutations.
  static FiniteGroup FromPermutations(const std::vector<Perm>& gens,
                                      std::vector<Perm>* elements = nullptr);
  static FiniteGroup Symmetric(int n);
  static FiniteGroup Dihedral(int n);  // order 2n
  // "trivial", "C<n>", "S<n>", "D<n>" (order 2n), joined by 'x'.
  static FiniteGroup Parse(const std::string& spec);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  int ElementOrder(int a) const;
  // Default generators used for Cayley balls: the named generators of the
  // factors (for Parse) or all non-identity elements otherwise.
  const std::vector<int>& generators() const { return generators_; }
  void set_generators(std::vector<int> g) { generators_ = std::move(g); }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::vector<int> generators_;
};

}  // namespace wreathgrowth

#endif  // WREATHGROWTH_FINITE_GROUP_H_

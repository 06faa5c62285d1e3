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

#include "wreathgrowth/backends.h"

#include <set>

namespace wreathgrowth {
namespace growth {

FreeLikeBackend::FreeLikeBackend(int m1, int m2) : m1_(m1), m2_(m2) {
  if (m1 < 0 || m2 < 0 || m1 + 2 * m2 < 1 || m1 + 2 * m2 > 26) {
    throw DomainError("free-like group needs 1 <= m1 + 2 m2 <= 26");
  }
  for (int i = 0; i < m1; ++i) {
    gens_.push_back({"t" + std::to_string(i + 1),
                     std::string(1, static_cast<char>('a' + i)), 1.0});
  }
  for (int j = 0; j < m2; ++j) {
    const int s = m1 + 2 * j;
    gens_.push_back({"x" + std::to_string(j + 1),
                     std::string(1, static_cast<char>('a' + s)), 1.0});
    gens_.push_back({"x" + std::to_string(j + 1) + "^-1",
                     std::string(1, static_cast<char>('a' + s + 1)), 1.0});
  }
}

int FreeLikeBackend::InverseSymbol(int s) const {
  if (s < m1_) return s;
  return ((s - m1_) % 2 == 0) ? s + 1 : s - 1;
}

FreeLikeBackend::Element FreeLikeBackend::Multiply(const Element& u,
                                                   const Element& v) const {
  Element r = u;
  for (char c : v) {
    const char inv = static_cast<char>('a' + InverseSymbol(c - 'a'));
    if (!r.empty() && r.back() == inv) {
      r.pop_back();
    } else {
      r.push_back(c);
    }
  }
  return r;
}

FreeLikeBackend::Element FreeLikeBackend::Invert(const Element& u) const {
  Element r(u.rbegin(), u.rend());
  for (char& c : r) c = static_cast<char>('a' + InverseSymbol(c - 'a'));
  return r;
}

std::string FreeLikeBackend::Format(const Element& u) const {
  if (u.empty()) return "1";
  std::string out;
  for (char c : u) {
    if (!out.empty()) out += " ";
    out += gens_[c - 'a'].label;
  }
  return out;
}

FiniteBackend::FiniteBackend(FiniteGroup g) : g_(std::move(g)) {
  for (int s : g_.generators()) gens_.push_back({g_.name(s), s, 1.0});
}

RacgBackend::RacgBackend(std::vector<std::vector<bool>> commute)
    : commute_(std::move(commute)) {
  const int n = static_cast<int>(commute_.size());
  if (n < 1 || n > 16) throw DomainError("RACG needs 1..16 vertices");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(commute_[i].size()) != n) {
      throw DomainError("commutation matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      if (commute_[i][j] != commute_[j][i]) {
        throw DomainError("commutation matrix must be symmetric");
      }
    }
    gens_.push_back({std::string(1, static_cast<char>('a' + i)),
                     std::string(1, static_cast<char>('a' + i)), 1.0});
  }
}

RacgBackend RacgBackend::Path(int n) {
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = true;
  return RacgBackend(std::move(c));
}

RacgBackend::Element RacgBackend::Normalize(const std::string& reduced) const {
  std::string rest = reduced, out;
  while (!rest.empty()) {
    int pick = -1;
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
      bool front = true;
      for (int j = 0; j < i && front; ++j) front = Commute(rest[j], rest[i]);
      if (front && (pick < 0 || rest[i] < rest[pick])) pick = i;
    }
    out.push_back(rest[pick]);
    rest.erase(rest.begin() + pick);
  }
  return out;
}

RacgBackend::Element RacgBackend::Multiply(const Element& u,
                                           const Element& v) const {
  std::string r = u;
  for (char s : v) {
    if (s - 'a' < 0 || s - 'a' >= static_cast<int>(commute_.size())) {
      throw DomainError("letter outside the RACG alphabet");
    }
    bool cancelled = false;
    for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
      if (r[i] == s) {
        r.erase(r.begin() + i);
        cancelled = true;
        break;
      }
      if (!Commute(r[i], s)) break;
    }
    if (!cancelled) r.push_back(s);
  }
  return Normalize(r);
}

RacgBackend::Element RacgBackend::Invert(const Element& u) const {
  return Normalize(std::string(u.rbegin(), u.rend()));
}

LamplighterBackend::LamplighterBackend(FiniteGroup f, Generators gens)
    : l_(std::move(f)) {
  if (gens == Generators::kDiestelLeader) {
    const auto dl = l_.DiestelLeaderGenerators();
    const int q = l_.f().order();
    for (int c = 0; c < q; ++c) {
      gens_.push_back({"(" + l_.f().name(c) + "@0)s", dl[c], 1.0});
    }
    for (int c = 0; c < q; ++c) {
      gens_.push_back({"s^-1(" + l_.f().name(c) + "@0)", dl[q + c], 1.0});
    }
    return;
  }
  for (int c : l_.f().generators()) {
    gens_.push_back({l_.f().name(c) + "@0", l_.Lamp(c, 0), 1.0});
  }
  gens_.push_back({"s", l_.Shift(1), 1.0});
  gens_.push_back({"s^-1", l_.Shift(-1), 1.0});
}

GrigBackend::GrigBackend(const selfsim::GrigGroup& g,
                         std::vector<std::string> gens,
                         std::vector<double> weights)
    : g_(g) {
  if (!weights.empty() && weights.size() != gens.size()) {
    throw DomainError("one weight per generator required");
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!selfsim::IsGrigWord(gens[i])) {
      throw ParseError("generator is not a word over a, b, c, d: " + gens[i]);
    }
    gens_.push_back({gens[i], selfsim::Reduce(gens[i]),
                     weights.empty() ? 1.0 : weights[i]});
  }
}

FiniteWreathBackend::FiniteWreathBackend(FiniteGroup h, int degree,
                                         const std::vector<Perm>& g)
    : w_(std::move(h), degree) {
  for (int t : w_.h().generators()) {
    gens_.push_back({w_.h().name(t) + "@0", w_.At(t, 0), 1.0});
  }
  for (size_t i = 0; i < g.size(); ++i) {
    gens_.push_back({"g" + std::to_string(i + 1), w_.Permutation(g[i]), 1.0});
  }
}

nlohmann::json KHillReport::ToJson() const {
  return {{"q", q},
          {"k", k},
          {"radius", radius},
          {"ball_size", ball_size},
          {"words", words},
          {"expected_words", expected_words},
          {"at_norm", at_norm},
          {"distinct_ends", distinct_ends},
          {"tops", tops},
          {"higher_tops", higher_tops},
          {"hill_tops_in_ball", hill_tops_in_ball},
          {"ok", ok()}};
}

KHillReport LamplighterKHillCheck(int q, int k, int64_t budget) {
  if (q < 2) throw DomainError("q must be >= 2");
  if (k < 1) throw DomainError("k must be >= 1");
  LamplighterBackend g(FiniteGroup::Cyclic(q),
                       LamplighterBackend::Generators::kDiestelLeader);
  KHillReport r;
  r.q = q;
  r.k = k;
  r.radius = 5 * k + 1;
  BallOptions opt;
  opt.edges = true;
  opt.budget = budget;
  const auto ball = EnumerateBall(g, r.radius, opt);
  r.ball_size = ball.size();
  const auto hills = FindKHills(ball, k);
  const auto higher = FindKHills(ball, k + 1);
  r.hill_tops_in_ball = static_cast<int64_t>(hills.size());
  const std::set<std::string> tops(hills.begin(), hills.end());
  const std::set<std::string> tops_higher(higher.begin(), higher.end());

  // q choices per letter, minus one at each of the two direction changes.
  int64_t expected = 1;
  for (int i = 0; i < 4 * k - 2; ++i) expected *= q;
  r.expected_words = expected * (q - 1) * (q - 1);

  const auto& gens = g.generators();
  const std::string one = g.Key(g.Identity());
  const int n = 4 * k;
  std::vector<int> digits(n, 0);
  std::set<std::string> ends;
  for (;;) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) {
      const bool down = i < k || i >= 3 * k;
      w[i] = (down ? q : 0) + digits[i];
    }
    bool reduced = true;
    for (int i = 0; i + 1 < n && reduced; ++i) {
      reduced = g.Key(g.Multiply(gens[w[i]].element,
                                 gens[w[i + 1]].element)) != one;
    }
    if (reduced) {
      ++r.words;
      const std::string key = g.Key(Evaluate(g, w));
      ends.insert(key);
      const auto f = ball.Find(key);
      if (f && ball.norms[*f] == 4 * k) ++r.at_norm;
      r.tops += tops.count(key);
      r.higher_tops += tops_higher.count(key);
    }
    int i = 0;
    while (i < n && ++digits[i] == q) digits[i++] = 0;
    if (i == n) break;
  }
  r.distinct_ends = static_cast<int64_t>(ends.size());
  return r;
}

}  // namespace growth
}  // namespace wreathgrowth

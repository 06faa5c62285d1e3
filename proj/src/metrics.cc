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

#include "wreathgrowth/metrics.h"

#include <algorithm>
#include <limits>
#include <map>

#include "wreathgrowth/backends.h"
#include "wreathgrowth/growth.h"

namespace wreathgrowth {
namespace metrics {

Point ToDouble(const ExactPoint& p) {
  return {{static_cast<double>(p[0]), static_cast<double>(p[1]),
           static_cast<double>(p[2])}};
}

bool InSimplex(const Point& p, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (!(p[i] > 0) || !(p[i] < 0.5)) return false;
  }
  return std::abs(p[0] + p[1] + p[2] - 1) <= tol;
}

bool InSimplex(const ExactPoint& p) {
  const Rational half(1, 2);
  for (int i = 0; i < 3; ++i) {
    if (p[i] <= 0 || p[i] >= half) return false;
  }
  return p[0] + p[1] + p[2] == 1;
}

double HilbertDistance(const Point& p, const Point& q) {
  RequireSimplex(p);
  RequireSimplex(q);
  if (p == q) return 0;
  // Chord p + t (q - p); the sides are x_i = 1/2.
  double t_plus = std::numeric_limits<double>::infinity();
  double t_minus = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const double dx = q[i] - p[i];
    if (dx == 0) continue;
    const double t = (0.5 - p[i]) / dx;
    if (dx > 0) {
      t_plus = std::min(t_plus, t);
    } else {
      t_minus = std::max(t_minus, t);
    }
  }
  if (!std::isfinite(t_plus) || !std::isfinite(t_minus) || t_plus <= 1 ||
      t_minus >= 0) {
    throw DomainError("degenerate chord: t- = " + std::to_string(t_minus) +
                      ", t+ = " + std::to_string(t_plus));
  }
  return std::log(t_plus / (t_plus - 1)) + std::log((1 - t_minus) / -t_minus);
}

Point MbarWord(const Point& p, const std::string& w, double* log_eta) {
  RequireSimplex(p);
  GapPoint cur = GapPoint::From(p);
  double sum = 0;
  for (char c : w) {
    if (c < '0' || c > '2') throw ParseError("letters must be 0, 1 or 2");
    sum += cur.Step(c - '0');
  }
  if (log_eta) *log_eta = sum;
  return cur.ToPoint();
}

Point FixedPointTail(const std::string& tail, double tol, const Point& seed,
                     int max_iter) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (tail.empty()) throw DomainError("tail must be non-empty");
  for (char c : {'0', '1', '2'}) {
    if (tail.find(c) == std::string::npos) {
      throw DomainError("tail must contain each of 0, 1, 2");
    }
  }
  for (char c : tail) {
    if (c < '0' || c > '2') throw ParseError("tail must be over {0,1,2}");
  }
  Point cur = seed;
  for (int it = 0; it < max_iter; ++it) {
    const Point next = MbarWord(cur, tail);
    const double d = HilbertDistance(cur, next);
    cur = next;
    if (d < tol) return cur;
  }
  throw ContractViolation("fixed point iteration did not converge");
}

double EtaPlus() {
  auto f = [](double t) { return ((t - 1) * t - 2) * t - 4; };
  double lo = 2.4, hi = 2.5;
  while (hi - lo > 1e-15) {
    const double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double Alpha() { return std::log(2.0) / std::log(EtaPlus()); }

double EtaPlusByPowerIteration(double tol) {
  // v -> M_0 P v with P the cyclic shift (x, y, z) -> (z, x, y).
  std::array<double, 3> v = {1, 1, 1};
  double rate = 0;
  for (int it = 0; it < 10000; ++it) {
    const std::array<double, 3> pv = {v[2], v[0], v[1]};
    const std::array<double, 3> w = {pv[0] + pv[1] + pv[2], 2 * pv[1],
                                     2 * pv[2]};
    const double s = w[0] + w[1] + w[2];
    const double next = s / (v[0] + v[1] + v[2]);
    for (int i = 0; i < 3; ++i) v[i] = w[i] / s;
    if (std::abs(next - rate) < tol) return next;
    rate = next;
  }
  return rate;
}

nlohmann::json NormAssignment::ToJson() const {
  return {{"p", {p[0], p[1], p[2]}},
          {"lambda", lambda},
          {"weights", {{"a", a}, {"b", b}, {"c", c}, {"d", d}}},
          {"eta", eta},
          {"mu", mu}};
}

NormAssignment NormsFromPoint(const Point& p, int lambda) {
  RequireSimplex(p);
  NormAssignment n;
  n.p = p;
  n.lambda = lambda;
  n.a = 1 - 2 * std::max(p[0], std::max(p[1], p[2]));
  n.b = p[0] - n.a;
  n.c = p[1] - n.a;
  n.d = p[2] - n.a;
  n.eta = Eta(p, lambda);
  n.mu = Mu(p);
  return n;
}

std::vector<NormAssignment> OmegaNorms(const OmegaSeq& omega, int count,
                                       const std::string& neg_tail) {
  std::vector<NormAssignment> out;
  Point p = FixedPointTail(neg_tail);
  for (int i = 0; i < count; ++i) {
    const int lambda = omega.Letter(i);
    out.push_back(NormsFromPoint(p, lambda));
    p = Mbar(p, lambda);
  }
  return out;
}

nlohmann::json SupercontractReport::ToJson() const {
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& v : examples) {
    ex.push_back({{"word", v.word}, {"norm", v.norm}, {"lhs", v.lhs},
                  {"rhs", v.rhs}});
  }
  return {{"max_letters", max_letters},
          {"elements", elements},
          {"violations", violations},
          {"conjugate_failures", conjugate_failures},
          {"worst_ratio", worst_ratio},
          {"eta", eta},
          {"examples", ex}};
}

namespace {

constexpr double kTol = 1e-9;

void RequireFamily(selfsim::Preset preset) {
  if (preset != selfsim::Preset::kFamily) {
    throw UnsupportedInput(
        "omega-norms are defined for the family recursion; use preset family");
  }
}

double MaxWordWeight(const std::vector<double>& w, int letters) {
  return letters * *std::max_element(w.begin(), w.end());
}

}  // namespace

SupercontractReport SupercontractCheck(const OmegaSeq& omega,
                                       selfsim::Preset preset, int max_letters,
                                       const std::string& neg_tail) {
  RequireFamily(preset);
  if (max_letters < 0) throw DomainError("max_letters must be >= 0");
  const auto norms = OmegaNorms(omega, 2, neg_tail);
  const NormAssignment& n0 = norms[0];
  const NormAssignment& n1 = norms[1];
  selfsim::GrigGroup g(preset, omega);
  selfsim::GrigGroup gs(preset, omega.Shift(1));
  growth::GrigBackend bw(g, {"a", "b", "c", "d"}, n0.Weights());
  growth::GrigBackend bs(gs, {"a", "b", "c", "d"}, n1.Weights());
  const double r_conj = MaxWordWeight(n0.Weights(), max_letters + 2);
  growth::BallOptions opt;
  opt.keep_elements = true;
  const auto ball = growth::EnumerateWeightedBall(bw, r_conj, opt);
  const double factor = 2 / n0.eta;
  const double r_sec = factor * (r_conj + n0.a) + kTol;
  const auto sball = growth::EnumerateWeightedBall(bs, r_sec);
  auto section_norm = [&](const std::string& w) {
    auto f = sball.Find(bs.Key(w));
    return f ? sball.weighted_norms[*f]
             : std::numeric_limits<double>::infinity();
  };
  auto norm_of = [&](const std::string& w) {
    auto f = ball.Find(bw.Key(w));
    if (!f) throw ContractViolation("element missing from the norm ball");
    return ball.weighted_norms[*f];
  };
  auto sections_sum = [&](const std::string& w) {
    const selfsim::Sections s = g.SectionsOf(w);
    return section_norm(s.w0) + section_norm(s.w1);
  };

  SupercontractReport rep;
  rep.max_letters = max_letters;
  rep.eta = n0.eta;
  std::map<std::string, std::string> elements;  // key -> geodesic word
  for (const std::string& w : selfsim::ReducedWords(max_letters)) {
    const std::string key = bw.Key(w);
    if (!elements.count(key)) {
      elements[key] = ball.elements[*ball.Find(key)];
    }
  }
  rep.elements = static_cast<int>(elements.size());
  for (const auto& [key, w] : elements) {
    const double norm = norm_of(w);
    const double lhs = sections_sum(w);
    const double rhs = factor * (norm + n0.a);
    if (rhs > 0) rep.worst_ratio = std::max(rep.worst_ratio, lhs / rhs);
    if (lhs > rhs + kTol) {
      ++rep.violations;
      if (rep.examples.size() < 10) rep.examples.push_back({w, norm, lhs, rhs});
    }
    if (w.empty() || w == "b" || w == "c" || w == "d") continue;
    bool strict = false;
    for (const char* s : {"", "a", "b", "c", "d"}) {
      const std::string h = selfsim::Reduce(std::string(s) + w + s);
      if (sections_sum(h) <= factor * norm_of(h) + kTol) {
        strict = true;
        break;
      }
    }
    if (!strict) ++rep.conjugate_failures;
  }
  return rep;
}

nlohmann::json UpperGReport::ToJson() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows) {
    rs.push_back({{"R", r.r}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  }
  return {{"rows", rs}, {"pass", pass}};
}

UpperGReport UpperGRecursionCheck(const OmegaSeq& omega, double r_max,
                                  double step, const std::string& neg_tail,
                                  int64_t budget) {
  if (r_max < 0 || !(step > 0)) throw DomainError("need r_max >= 0, step > 0");
  const auto norms = OmegaNorms(omega, 2, neg_tail);
  const NormAssignment& n0 = norms[0];
  const NormAssignment& n1 = norms[1];
  selfsim::GrigGroup g(selfsim::Preset::kFamily, omega);
  selfsim::GrigGroup gs(selfsim::Preset::kFamily, omega.Shift(1));
  growth::GrigBackend bw(g, {"a", "b", "c", "d"}, n0.Weights());
  growth::GrigBackend bs(gs, {"a", "b", "c", "d"}, n1.Weights());
  growth::BallOptions opt;
  opt.budget = budget;
  const double factor = 2 / n0.eta;
  const auto ball = growth::EnumerateWeightedBall(bw, r_max + n0.mu, opt);
  const double t_max = factor * (r_max + n0.mu + n0.a);
  const auto sball = growth::EnumerateWeightedBall(bs, t_max, opt);
  std::vector<double> sn = sball.weighted_norms;
  std::sort(sn.begin(), sn.end());
  UpperGReport rep;
  for (double r = 0; r <= r_max + kTol; r += step) {
    UpperGRow row;
    row.r = r;
    row.lhs = ball.CountWithin(r + n0.mu, kTol);
    const double t = factor * (r + n0.mu + n0.a) + kTol;
    int64_t pairs = 0;
    size_t j = sn.size();
    for (size_t i = 0; i < sn.size() && sn[i] <= t; ++i) {
      while (j > 0 && sn[i] + sn[j - 1] > t) --j;
      pairs += static_cast<int64_t>(j);
    }
    row.rhs = 2 * pairs;
    if (row.lhs > row.rhs) rep.pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace metrics
}  // namespace wreathgrowth

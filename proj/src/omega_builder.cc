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

#include "wreathgrowth/omega_builder.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "wreathgrowth/errors.h"

namespace wreathgrowth {
namespace metrics {
namespace {

const double kLog2 = std::log(2.0);
const double kLog3 = std::log(3.0);

std::map<std::string, std::string> ParseParams(const std::string& s) {
  std::map<std::string, std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value in profile parameters: " + item);
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

double ParseDouble(const std::string& s) {
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not a number: " + s);
  }
  if (pos != s.size()) throw ParseError("not a number: " + s);
  return v;
}

}  // namespace

GrowthProfile GrowthProfile::ExpPow(double alpha) {
  if (!(alpha > 0) || alpha > 1) throw DomainError("alpha must be in (0, 1]");
  return {"exp_pow:alpha=" + std::to_string(alpha),
          [alpha](double rho) { return alpha * rho; }};
}

GrowthProfile GrowthProfile::Exp() {
  return {"exp", [](double rho) { return rho; }};
}

GrowthProfile GrowthProfile::ExpOverLog(double c) {
  if (!(c > 1)) throw DomainError("c must exceed 1");
  const double llc = std::log(std::log(c));
  return {"exp_over_log:c=" + std::to_string(c), [c, llc](double rho) {
            // log(R + c - 1) = rho + log1p((c - 1) / R)
            const double l = rho + std::log1p((c - 1) * std::exp(-rho));
            return rho + llc - std::log(l);
          }};
}

GrowthProfile GrowthProfile::ExpOverLogLog(double c) {
  if (!(std::log(c) > 1)) throw DomainError("c must exceed e");
  const double lllc = std::log(std::log(std::log(c)));
  return {"exp_over_loglog:c=" + std::to_string(c), [c, lllc](double rho) {
            const double l = rho + std::log1p((c - 1) * std::exp(-rho));
            return rho + lllc - std::log(std::log(l));
          }};
}

GrowthProfile GrowthProfile::Tabulated(
    std::vector<std::pair<double, double>> rows) {
  if (rows.size() < 2) throw ParseError("profile table needs two rows");
  std::sort(rows.begin(), rows.end());
  if (rows.front().first != 0 || rows.front().second != 0) {
    throw ParseError("profile table must start at (0, 0)");
  }
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first == rows[i - 1].first) {
      throw ParseError("duplicate log_R in profile table");
    }
  }
  return {"table", [rows = std::move(rows)](double rho) {
            if (rho < 0) throw DomainError("profile evaluated below log R = 0");
            auto it = std::upper_bound(
                rows.begin(), rows.end(), rho,
                [](double v, const auto& r) { return v < r.first; });
            size_t i = it - rows.begin();
            i = std::clamp<size_t>(i, 1, rows.size() - 1);
            const auto& [x0, y0] = rows[i - 1];
            const auto& [x1, y1] = rows[i];
            return y0 + (y1 - y0) * (rho - x0) / (x1 - x0);
          }};
}

GrowthProfile GrowthProfile::FromCsv(std::istream& in) {
  std::vector<std::pair<double, double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected x,y");
    }
    try {
      rows.emplace_back(ParseDouble(line.substr(0, comma)),
                        ParseDouble(line.substr(comma + 1)));
    } catch (const ParseError&) {
      if (rows.empty() && lineno == 1) continue;  // header
      throw ParseError("line " + std::to_string(lineno) + ": bad number");
    }
  }
  return Tabulated(std::move(rows));
}

GrowthProfile GrowthProfile::Parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "table") {
    std::ifstream in(rest);
    if (!in) throw ParseError("cannot open profile table " + rest);
    return FromCsv(in);
  }
  const auto params = ParseParams(rest);
  auto get = [&](const std::string& key, double def) {
    auto it = params.find(key);
    return it == params.end() ? def : ParseDouble(it->second);
  };
  for (const auto& [k, v] : params) {
    if (k != "alpha" && k != "c") throw ParseError("unknown parameter " + k);
  }
  if (name == "exp") return Exp();
  if (name == "exp_pow") return ExpPow(get("alpha", Alpha()));
  if (name == "exp_over_log") return ExpOverLog(get("c", std::exp(3.0)));
  if (name == "exp_over_loglog") {
    return ExpOverLogLog(get("c", std::exp(std::exp(1.0))));
  }
  throw ParseError("unknown profile " + name);
}

nlohmann::json GrowthProfile::Validation::ToJson() const {
  return {{"ok", ok},
          {"monotone", monotone},
          {"grid_points", grid_points},
          {"failing_log_R", failing_rho}};
}

GrowthProfile::Validation GrowthProfile::Validate(int grid_points,
                                                  double rel_tol) const {
  if (grid_points < 2) throw DomainError("grid needs two points");
  Validation v;
  v.grid_points = grid_points;
  const double log_eta = std::log(EtaPlus());
  const double top = 200 * log_eta;
  auto tol = [&](double x) { return rel_tol * std::max(1.0, std::abs(x)); };
  auto fail = [&](double rho) {
    v.ok = false;
    if (v.failing_rho.size() < 10) v.failing_rho.push_back(rho);
  };
  double prev = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double rho = top * i / (grid_points - 1);
    const double g = (*this)(rho);
    if (!std::isfinite(g)) {
      fail(rho);
      continue;
    }
    if (i > 0 && g < prev - tol(prev)) {
      v.monotone = false;
      fail(rho);
    }
    prev = g;
    const double g2 = (*this)(rho + kLog2);
    const double ge = (*this)(rho + log_eta);
    if (g2 > g + kLog2 + tol(g2) || g + kLog2 > ge + tol(ge)) fail(rho);
  }
  if (std::abs((*this)(0)) > rel_tol) fail(0);
  return v;
}

nlohmann::json OmegaBuildResult::ToJson() const {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& s : boundaries) {
    b.push_back({{"k", s.k},
                 {"syllable", s.after_012 ? "012" : "2"},
                 {"log_g", s.log_g},
                 {"k_log2", s.target},
                 {"ratio", s.target > 0 ? s.log_g / s.target : 0.0},
                 {"window", {s.lo, s.hi}},
                 {"ok", s.ok}});
  }
  return {{"length", prefix.size()},
          {"syllables", Syllables()},
          {"letters_012", letters_012},
          {"letters_2", letters_2},
          {"fraction_012", Fraction012()},
          {"log_eta", log_eta},
          {"windows_ok", windows_ok},
          {"boundaries", b}};
}

OmegaBuildResult OmegaBuild(const GrowthProfile& profile, long long k_max) {
  if (k_max < 0 || k_max > 10000) throw DomainError("k_max must be in [0, 1e4]");
  const auto val = profile.Validate();
  if (!val.ok) {
    std::string pts;
    for (double r : val.failing_rho) pts += " " + std::to_string(r);
    throw DomainError("profile " + profile.name() +
                      " violates the doubling conditions at log R =" + pts);
  }
  OmegaBuildResult res;
  GapPoint p = GapPoint::From(FixedPointTail("012"));
  double L = 0;
  auto k = [&] { return static_cast<long long>(res.prefix.size()); };
  auto gap = [&] { return profile(L) - k() * kLog2; };
  auto append = [&](const std::string& block) {
    for (char c : block) {
      L += p.Step(c - '0');
      res.prefix.push_back(c);
    }
  };
  auto record = [&](bool after_012) {
    SyllableBoundary s;
    s.k = k();
    s.after_012 = after_012;
    s.log_g = profile(L);
    s.target = k() * kLog2;
    const double lo = after_012 ? s.target : s.target - kLog2;
    const double hi = after_012 ? s.target + 3 * kLog3 : s.target;
    const double pad = 0.025 * (hi - lo);
    s.lo = lo - pad;
    s.hi = hi + pad;
    s.ok = s.log_g >= s.lo && s.log_g <= s.hi;
    res.windows_ok = res.windows_ok && s.ok;
    res.boundaries.push_back(s);
  };
  bool in_012 = true;
  while (true) {
    if (in_012) {
      if (k() + 3 > k_max) break;
      append("012");
      res.letters_012 += 3;
      bool complete = true;
      while (gap() < 0) {
        if (k() + 3 > k_max) {
          complete = false;
          break;
        }
        append("012");
        res.letters_012 += 3;
      }
      if (!complete) break;
      record(true);
    } else {
      if (k() + 1 > k_max) break;
      append("2");
      ++res.letters_2;
      bool complete = true;
      while (gap() > 0) {
        if (k() + 1 > k_max) {
          complete = false;
          break;
        }
        append("2");
        ++res.letters_2;
      }
      if (!complete) break;
      record(false);
    }
    in_012 = !in_012;
  }
  res.log_eta = L;
  return res;
}

nlohmann::json BlockEtaReport::ToJson() const {
  return {{"n_max", n_max},  {"grid_points", grid_points},
          {"lower", lower},  {"upper", upper},
          {"A_prime", a_prime}, {"B_prime", b_prime}};
}

BlockEtaReport BlockEtaBounds(int n_max, int lattice) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  if (lattice < 3) throw DomainError("lattice must be >= 3");
  std::vector<GapPoint> grid;
  for (int i = 1; i < lattice; ++i) {
    for (int j = 1; i + j < lattice; ++j) {
      const int l = lattice - i - j;
      const double s = 2.0 * lattice;
      grid.push_back({{i / s, j / s, l / s}});
    }
  }
  BlockEtaReport rep;
  rep.n_max = n_max;
  rep.grid_points = static_cast<int>(grid.size());
  rep.lower.assign(n_max + 1, std::numeric_limits<double>::infinity());
  rep.upper.assign(n_max + 1, 0.0);
  const double log_eta3 = 3 * std::log(EtaPlus());
  for (const GapPoint& start : grid) {
    GapPoint a = start, b = start;
    double la = 0, lb = 0;
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) {
        la += a.Step(0) + a.Step(1) + a.Step(2);
        lb += b.Step(2);
      }
      rep.lower[n] = std::min(rep.lower[n], std::exp(la - n * log_eta3));
      rep.upper[n] = std::max(rep.upper[n], std::exp(lb - n * kLog2));
    }
  }
  rep.a_prime = *std::min_element(rep.lower.begin(), rep.lower.end());
  rep.b_prime = *std::max_element(rep.upper.begin(), rep.upper.end());
  return rep;
}

nlohmann::json MuWindowReport::ToJson() const {
  return {{"checked", checked},
          {"min_mu", min_mu},
          {"max_mu", max_mu},
          {"first_violation", first_violation},
          {"pass", pass}};
}

MuWindowReport MuWindowCheck(const OmegaSeq& omega, long long k_max, double lo,
                             double hi) {
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  const std::string w = omega.Prefix(k_max);
  const auto first = w.find("012");
  const long long start =
      first == std::string::npos ? k_max + 1 : static_cast<long long>(first) + 3;
  MuWindowReport rep;
  GapPoint p = GapPoint::From(FixedPointTail("012"));
  for (long long k = 0; k <= k_max; ++k) {
    if (k > 0) p.Step(w[k - 1] - '0');
    if (k != 0 && k < start) continue;
    const double mu = p.Mu();
    ++rep.checked;
    rep.min_mu = std::min(rep.min_mu, mu);
    rep.max_mu = std::max(rep.max_mu, mu);
    if (!(mu > lo && mu < hi) && rep.pass) {
      rep.pass = false;
      rep.first_violation = k;
    }
  }
  return rep;
}

}  // namespace metrics
}  // namespace wreathgrowth

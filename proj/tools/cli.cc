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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreathgrowth/backends.h"
#include "wreathgrowth/cache.h"
#include "wreathgrowth/errors.h"
#include "wreathgrowth/growth.h"
#include "wreathgrowth/invorbit.h"
#include "wreathgrowth/metrics.h"
#include "wreathgrowth/omega.h"
#include "wreathgrowth/omega_builder.h"
#include "wreathgrowth/permwreath.h"
#include "wreathgrowth/schreier.h"
#include "wreathgrowth/selfsim.h"
#include "wreathgrowth/series.h"
#include "wreathgrowth/wreath.h"

namespace wreathgrowth {
namespace cli {
namespace {

using nlohmann::json;

// What a subcommand produces.  Empty csv falls back to key,value rows of
// the scalar JSON fields; empty text falls back to indented JSON.
struct Result {
  json data = json::object();
  std::string text;
  std::string csv;
  int code = kOk;
};

class Context {
 public:
  Context(const RunConfig& cfg, std::ostream& err) : cfg_(cfg), err_(err) {}
  const RunConfig& cfg() const { return cfg_; }
  void Progress(const std::string& msg) const {
    if (!cfg_.quiet) err_ << "wgrowth: " << msg << "\n";
  }
  void Warn(const std::string& msg) const {
    err_ << "wgrowth: warning: " << msg << "\n";
  }
  std::optional<cache::Store> store() const {
    if (cfg_.cache_dir.empty()) return std::nullopt;
    return cache::Store(cfg_.cache_dir);
  }
  void CheckRadius(double r) const {
    if (r > cfg_.max_radius) {
      throw ResourceError("radius " + nlohmann::json(r).dump() +
                          " exceeds the configured limit max-radius=" +
                          std::to_string(cfg_.max_radius));
    }
  }

 private:
  const RunConfig& cfg_;
  std::ostream& err_;
};

// ---------------------------------------------------------------------------
// Group specs.

struct SpecParts {
  std::string kind;
  std::vector<std::string> flags;  // items without '='
  std::map<std::string, std::string> kv;
};

SpecParts SplitSpec(const std::string& spec) {
  SpecParts p;
  const size_t colon = spec.find(':');
  p.kind = spec.substr(0, colon);
  if (colon == std::string::npos) return p;
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos) {
      if (!item.empty()) p.flags.push_back(item);
    } else {
      p.kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return p;
}

int ToInt(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad integer for " + what + ": '" + s + "'");
}

void RequireKeys(const SpecParts& p, const std::vector<std::string>& allowed) {
  for (const auto& [k, v] : p.kv) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw ParseError("unknown key '" + k + "' in " + p.kind + " spec");
    }
  }
}

// grigorchuk:fsa | grigorchuk:family[,omega=<omega-spec>]
selfsim::GrigGroup MakeGrig(const std::string& spec) {
  const SpecParts p = SplitSpec(spec);
  if (p.kind != "grigorchuk" || p.flags.size() != 1) {
    throw ParseError("expected grigorchuk:fsa or grigorchuk:family, got '" +
                     spec + "'");
  }
  RequireKeys(p, {"omega"});
  const selfsim::Preset preset = selfsim::ParsePreset(p.flags[0]);
  OmegaSeq omega = OmegaSeq::Periodic("012");
  if (p.kv.count("omega")) {
    if (preset == selfsim::Preset::kFsa) {
      throw ParseError("omega applies to the family preset only");
    }
    omega = OmegaSeq::Parse(p.kv.at("omega"));
  }
  return selfsim::GrigGroup(preset, omega);
}

schreier::OrbitPoint ParsePoint(const std::string& text) {
  if (text == "xi" || text.empty()) return schreier::Xi();
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("orbit point must be 'xi' or a binary word: '" + text +
                       "'");
    }
  }
  return schreier::OrbitPoint(text);
}

std::vector<schreier::OrbitPoint> ParsePoints(const std::string& text) {
  std::vector<schreier::OrbitPoint> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(ParsePoint(item));
  if (out.empty()) out.push_back(schreier::Xi());
  return out;
}

// Calls f(backend) with the marked group named by spec.
template <typename F>
auto WithBackend(const std::string& spec, F&& f) {
  const SpecParts p = SplitSpec(spec);
  if (p.kind == "free") {
    RequireKeys(p, {"k", "c2"});
    if (!p.kv.count("k") && !p.kv.count("c2")) {
      throw ParseError("free spec needs k=<rank>");
    }
    const int k = p.kv.count("k") ? ToInt(p.kv.at("k"), "k") : 0;
    const int c2 = p.kv.count("c2") ? ToInt(p.kv.at("c2"), "c2") : 0;
    return f(growth::FreeLikeBackend(c2, k));
  }
  if (p.kind == "finite") {
    return f(growth::FiniteBackend(FiniteGroup::Parse(spec.substr(7))));
  }
  if (p.kind == "lamplighter") {
    std::string base = spec;
    auto gens = growth::LamplighterBackend::Generators::kStandard;
    const std::string dl = ",gens=dl";
    if (base.size() > dl.size() &&
        base.compare(base.size() - dl.size(), dl.size(), dl) == 0) {
      base.resize(base.size() - dl.size());
      gens = growth::LamplighterBackend::Generators::kDiestelLeader;
    }
    const int q = wreath::ParseLamplighterSpec(base);
    return f(growth::LamplighterBackend(FiniteGroup::Cyclic(q), gens));
  }
  if (p.kind == "wreath") {
    return f(growth::FiniteWreathBackend(wreath::ParseWreathSpec(spec)));
  }
  if (p.kind == "grigorchuk") {
    const selfsim::GrigGroup g = MakeGrig(spec);
    return f(growth::GrigBackend(g));
  }
  if (p.kind == "permwreath") {
    RequireKeys(p, {"H", "omega", "points"});
    const FiniteGroup h = FiniteGroup::Parse(p.kv.count("H") ? p.kv.at("H") : "C2");
    const OmegaSeq omega = OmegaSeq::Parse(
        p.kv.count("omega") ? p.kv.at("omega") : "periodic:012");
    const selfsim::GrigGroup g(selfsim::Preset::kFamily, omega);
    const auto points = ParsePoints(p.kv.count("points") ? p.kv.at("points") : "");
    return f(permwreath::PermWreathBackend::Standard(h, g, points));
  }
  throw ParseError("unknown group spec '" + spec + "'");
}

// ---------------------------------------------------------------------------
// Formatting helpers.

json Int(const BigInt& v) {
  if (v >= std::numeric_limits<int64_t>::min() &&
      v <= std::numeric_limits<int64_t>::max()) {
    return static_cast<int64_t>(v);
  }
  return v.str();
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <typename T>
std::string JoinNumbers(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(json(x).dump());
  return Join(parts, ",");
}

std::string ScalarCsv(const json& data) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : data.items()) {
    if (v.is_primitive()) {
      os << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return os.str();
}

std::vector<double> ReadWeights(const std::string& path,
                                const std::vector<std::string>& labels) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read weights file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("weights file " + path + ": " + e.what());
  }
  std::vector<double> w;
  if (j.is_array()) {
    for (const auto& x : j) w.push_back(x.get<double>());
    if (w.size() != labels.size()) {
      throw ParseError("weights file needs " + std::to_string(labels.size()) +
                       " weights");
    }
    return w;
  }
  if (!j.is_object()) throw ParseError("weights file must hold an array or object");
  for (const auto& [k, v] : j.items()) {
    if (std::find(labels.begin(), labels.end(), k) == labels.end()) {
      throw ParseError("weights file names unknown generator '" + k + "'");
    }
  }
  for (const auto& l : labels) {
    if (!j.contains(l)) throw ParseError("weights file misses generator '" + l + "'");
    w.push_back(j.at(l).get<double>());
  }
  return w;
}

std::vector<double> ParseWeightList(const std::string& text) {
  std::vector<double> w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      w.push_back(std::stod(item, &used));
      if (used != item.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad weight '" + item + "'");
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Subcommands.

Result RunMul(const Context&, const std::string& group,
              const std::vector<std::string>& words) {
  const selfsim::GrigGroup g = MakeGrig(group);
  std::string product;
  for (const auto& w : words) {
    if (!selfsim::IsGrigWord(w)) throw ParseError("not a word over abcd: " + w);
    product += w;
  }
  const std::string reduced = selfsim::Reduce(product);
  Result r;
  r.data = {{"group", group},
            {"factors", words},
            {"product", reduced},
            {"portrait", g.PortraitKey(reduced)},
            {"trivial", g.IsTrivial(reduced)}};
  r.text = (reduced.empty() ? "1" : reduced) + "\n";
  return r;
}

Result RunWp(const Context&, const std::string& group, const std::string& word) {
  const selfsim::GrigGroup g = MakeGrig(group);
  if (!selfsim::IsGrigWord(word)) throw ParseError("not a word over abcd: " + word);
  const bool trivial = g.IsTrivial(word);
  Result r;
  r.data = {{"group", group}, {"word", word}, {"trivial", trivial}};
  r.text = trivial ? "trivial\n" : "nontrivial\n";
  return r;
}

Result RunOrder(const Context&, const std::string& group, const std::string& word) {
  const selfsim::GrigGroup g = MakeGrig(group);
  if (!selfsim::IsGrigWord(word)) throw ParseError("not a word over abcd: " + word);
  const int64_t order = g.Order(word);
  Result r;
  r.data = {{"group", group}, {"word", word}, {"order", order}};
  r.text = std::to_string(order) + "\n";
  return r;
}

Result RunPortrait(const Context&, const std::string& group,
                   const std::string& word) {
  const selfsim::GrigGroup g = MakeGrig(group);
  if (!selfsim::IsGrigWord(word)) throw ParseError("not a word over abcd: " + word);
  const auto portrait = g.PortraitOf(word);
  Result r;
  r.data = {{"group", group},
            {"word", word},
            {"key", g.PortraitKey(word)},
            {"depth", portrait->Depth()},
            {"portrait", portrait->ToJson()}};
  r.text = g.PortraitKey(word) + "\n";
  return r;
}

struct BallArgs {
  std::string group;
  double radius = 0;
  std::string weights_file;
  bool edges = false;
};

template <typename B>
growth::BallRecord ComputeBall(const Context& ctx, const B& backend,
                               const BallArgs& a,
                               const std::vector<double>& weights) {
  growth::BallOptions opt;
  opt.edges = a.edges;
  opt.budget = ctx.cfg().budget;
  opt.tolerance = ctx.cfg().tolerance;
  if (weights.empty()) {
    return growth::EnumerateBall(backend, static_cast<int>(a.radius), opt);
  }
  auto gens = backend.generators();
  for (size_t i = 0; i < gens.size(); ++i) gens[i].weight = weights[i];
  growth::Regenerated<B> re(backend, gens);
  return growth::EnumerateWeightedBall(re, a.radius, opt);
}

Result RunBall(const Context& ctx, const BallArgs& a) {
  ctx.CheckRadius(a.radius);
  if (a.radius < 0) throw DomainError("radius must be >= 0");
  return WithBackend(a.group, [&](const auto& backend) {
    std::vector<std::string> labels;
    for (const auto& g : backend.generators()) labels.push_back(g.label);
    std::vector<double> weights;
    if (!a.weights_file.empty()) weights = ReadWeights(a.weights_file, labels);
    if (weights.empty() && a.radius != std::floor(a.radius)) {
      throw DomainError("unweighted balls need an integer radius");
    }
    if (!weights.empty() && a.edges) {
      throw DomainError("--edges is only available for unweighted balls");
    }
    const std::string wd = cache::WeightsDigest(weights);
    const std::string key = cache::BallKey(
        a.group + (a.edges ? "|edges" : ""), a.radius, wd);
    std::optional<growth::BallRecord> ball;
    const auto store = ctx.store();
    if (store) {
      if (auto bytes = store->Read(key, "ball")) {
        try {
          ball = cache::DecodeBall(*bytes, key);
          ctx.Progress("ball cache hit " + store->Path(key, "ball"));
        } catch (const cache::CacheError& e) {
          ctx.Warn("discarding cache entry " + store->Path(key, "ball") + ": " +
                   e.what() + "; recomputing");
        }
      }
    }
    if (!ball) {
      ctx.Progress("enumerating ball of " + a.group + " to radius " +
                   json(a.radius).dump());
      ball = ComputeBall(ctx, backend, a, weights);
      ctx.Progress("ball has " + std::to_string(ball->size()) + " elements");
      if (store) store->Write(key, "ball", cache::EncodeBall(key, *ball));
    }
    Result r;
    r.data = {{"group", a.group},
              {"radius", a.radius},
              {"weighted", !weights.empty()},
              {"labels", labels},
              {"size", ball->size()}};
    std::ostringstream csv, text;
    if (weights.empty()) {
      const auto cum = ball->Cumulative();
      r.data["spheres"] = ball->spheres;
      r.data["cumulative"] = cum;
      if (a.radius > 0) {
        r.data["log_growth_rate"] =
            std::log(static_cast<double>(cum.back())) / a.radius;
      }
      csv << "radius,sphere,cumulative\n";
      for (size_t i = 0; i < ball->spheres.size(); ++i) {
        csv << i << "," << ball->spheres[i] << "," << cum[i] << "\n";
      }
      text << "spheres " << JoinNumbers(ball->spheres) << "\n"
           << "ball " << cum.back() << "\n";
    } else {
      r.data["weights"] = weights;
      r.data["weights_digest"] = wd;
      json levels = json::array();
      csv << "norm,count,cumulative\n";
      int64_t total = 0;
      for (const auto& [norm, count] : ball->WeightedLevels(ctx.cfg().tolerance)) {
        total += count;
        levels.push_back({norm, count});
        csv << json(norm).dump() << "," << count << "," << total << "\n";
      }
      r.data["levels"] = levels;
      text << "weighted ball " << ball->size() << "\n";
    }
    if (a.edges) {
      json edges = json::array();
      const int k = static_cast<int>(ball->labels.size());
      for (int v = 0; v < ball->size(); ++v) {
        for (int s = 0; s < k; ++s) {
          const int t = ball->edges[v * k + s];
          if (t >= 0) edges.push_back({v, ball->labels[s], t});
        }
      }
      r.data["edges"] = edges;
    }
    r.csv = csv.str();
    r.text = text.str();
    return r;
  });
}

Result RunDiameter(const Context& ctx, int level, const std::string& preset) {
  ctx.Progress("quotient diameter at level " + std::to_string(level));
  const auto q = growth::ComputeQuotientDiameter(level, selfsim::ParsePreset(preset));
  Result r;
  r.data = {{"level", q.level},
            {"preset", preset},
            {"diameter", q.diameter},
            {"order", q.order},
            {"spheres", q.spheres}};
  r.text = "D=" + std::to_string(q.diameter) + " order=" +
           std::to_string(q.order) + "\n";
  std::ostringstream csv;
  csv << "radius,sphere\n";
  for (size_t i = 0; i < q.spheres.size(); ++i) csv << i << "," << q.spheres[i] << "\n";
  r.csv = csv.str();
  return r;
}

struct SeriesArgs {
  std::string combinator;
  int order = 8;
  std::string h = "C2";
  std::string h2 = "C2";
  std::string g = "C2";
  int m1 = 0;
  int m2 = 1;
  int d = 1;
};

series::Series FiniteBallSeries(const Context& ctx, const std::string& spec,
                                int order) {
  growth::BallOptions opt;
  opt.budget = ctx.cfg().budget;
  const auto ball = growth::EnumerateBall(
      growth::FiniteBackend(FiniteGroup::Parse(spec)), order, opt);
  return series::Series::FromInts(order, ball.spheres);
}

Result RunSeries(const Context& ctx, const SeriesArgs& a) {
  if (a.order < 0) throw DomainError("order must be >= 0");
  ctx.CheckRadius(a.order);
  std::string spec = a.combinator;
  std::function<series::Series()> compute;
  const int n = a.order;
  if (a.combinator == "free-like") {
    spec += "|m1=" + std::to_string(a.m1) + "|m2=" + std::to_string(a.m2);
    compute = [&] { return series::FreeLike(a.m1, a.m2, n); };
  } else if (a.combinator == "finite") {
    spec += "|h=" + a.h;
    compute = [&] { return FiniteBallSeries(ctx, a.h, n); };
  } else if (a.combinator == "direct-product" || a.combinator == "free-product") {
    spec += "|h=" + a.h + "|h2=" + a.h2;
    compute = [&] {
      const auto x = FiniteBallSeries(ctx, a.h, n);
      const auto y = FiniteBallSeries(ctx, a.h2, n);
      return a.combinator == "direct-product" ? series::DirectProduct(x, y)
                                              : series::FreeProduct(x, y);
    };
  } else if (a.combinator == "finite-x-wreath") {
    spec += "|h=" + a.h + "|g=" + a.g + "|d=" + std::to_string(a.d);
    compute = [&] {
      return series::FiniteXWreath(FiniteBallSeries(ctx, a.h, n),
                                   FiniteBallSeries(ctx, a.g, n), a.d);
    };
  } else if (a.combinator == "parry" || a.combinator == "parry-per-symbol") {
    spec += "|h=" + a.h + "|m1=" + std::to_string(a.m1) + "|m2=" +
            std::to_string(a.m2);
    compute = [&] {
      const auto gh = FiniteBallSeries(ctx, a.h, n);
      return a.combinator == "parry"
                 ? series::ParryWreath(gh, a.m1, a.m2, n)
                 : series::ParryWreathPerSymbol(gh, a.m1, a.m2, n);
    };
  } else {
    throw ParseError("unknown series combinator '" + a.combinator +
                     "' (free-like, finite, direct-product, free-product, "
                     "finite-x-wreath, parry, parry-per-symbol)");
  }
  const std::string key = cache::SeriesKey(spec, n);
  std::optional<series::Series> s;
  const auto store = ctx.store();
  if (store) {
    if (auto bytes = store->Read(key, "series")) {
      try {
        s = cache::DecodeSeries(*bytes, key);
        ctx.Progress("series cache hit " + store->Path(key, "series"));
      } catch (const cache::CacheError& e) {
        ctx.Warn("discarding cache entry " + store->Path(key, "series") + ": " +
                 e.what() + "; recomputing");
      }
    }
  }
  if (!s) {
    ctx.Progress("computing series " + spec + " to order " + std::to_string(n));
    s = compute();
    if (store) store->Write(key, "series", cache::EncodeSeries(key, *s));
  }
  Result r;
  json coeffs = json::array();
  std::vector<std::string> text;
  const bool integral = s->IsIntegral();
  for (const auto& c : s->coeffs()) {
    if (integral) {
      coeffs.push_back(Int(numerator(c)));
    } else {
      coeffs.push_back(c.str());
    }
    text.push_back(c.str());
  }
  r.data = {{"combinator", a.combinator},
            {"spec", spec},
            {"order", n},
            {"integral", integral},
            {"coefficients", coeffs}};
  r.text = Join(text, " ") + "\n";
  std::ostringstream csv;
  csv << "n,coefficient\n";
  for (int i = 0; i <= n; ++i) csv << i << "," << text[i] << "\n";
  r.csv = csv.str();
  return r;
}

Result RunSchreier(const Context& ctx, const std::string& group,
                   const std::string& basepoint, int limit, int radius) {
  const selfsim::GrigGroup g = MakeGrig(group);
  const schreier::OrbitPoint base = ParsePoint(basepoint);
  if (limit > ctx.cfg().budget) {
    throw ResourceError("schreier limit exceeds the element budget");
  }
  ctx.Progress("schreier graph of " + base.ToString());
  const auto sg = schreier::BuildSchreier(schreier::GrigOrbitAction(g), base,
                                          limit, radius);
  Result r;
  json edges = json::array();
  for (int v = 0; v < sg.num_vertices(); ++v) {
    for (int l = 0; l < static_cast<int>(sg.labels.size()); ++l) {
      const int t = sg.Target(v, l);
      if (t >= 0) edges.push_back({v, sg.labels[l], t});
    }
  }
  r.data = {{"group", group},
            {"basepoint", base.ToString()},
            {"vertices", sg.num_vertices()},
            {"labels", sg.labels},
            {"names", sg.names},
            {"edges", edges}};
  r.text = sg.ToDot();
  r.csv = sg.ToCsv();
  return r;
}

struct InvorbitArgs {
  std::string group = "grigorchuk:fsa";
  std::string word;
  bool has_word = false;
  double delta = -1;
  std::string weights;
  int witness = -1;
  std::string omega = "periodic:012";
  std::string basepoint = "xi";
  bool include_word = false;
};

Result RunInvorbit(const Context& ctx, const InvorbitArgs& a) {
  const int modes = a.has_word + (a.delta >= 0) + (a.witness >= 0);
  if (modes != 1) {
    throw DomainError("give exactly one of --word, --delta, --witness");
  }
  Result r;
  if (a.witness >= 0) {
    ctx.Progress("witness word for k=" + std::to_string(a.witness));
    const auto w = invorbit::WitnessWord(a.witness, OmegaSeq::Parse(a.omega));
    r.data = w.ToJson(a.include_word);
    r.text = "k=" + std::to_string(w.k) + " orbit=" +
             std::to_string(w.orbit_size) + " weighted_length=" +
             json(w.weighted_length).dump() + "\n";
    if (!w.orbit_ok || !w.length_ok) r.code = kCheckFailed;
    return r;
  }
  const selfsim::GrigGroup g = MakeGrig(a.group);
  const auto xi = ParsePoint(a.basepoint);
  if (a.has_word) {
    if (!selfsim::IsGrigWord(a.word)) throw ParseError("not a word over abcd: " + a.word);
    const auto o = invorbit::ComputeInvertedOrbit(g, a.word, xi);
    r.data = o.ToJson();
    r.data["group"] = a.group;
    std::vector<std::string> names;
    for (const auto& p : o.points) names.push_back(p.ToString());
    r.text = "{" + Join(names, ", ") + "}\n";
    return r;
  }
  const std::vector<double> weights =
      a.weights.empty() ? std::vector<double>{} : ParseWeightList(a.weights);
  if (weights.empty()) ctx.CheckRadius(a.delta);
  invorbit::EnumerationLimits limits;
  limits.max_words = ctx.cfg().budget;
  ctx.Progress("enumerating inverted orbits to radius " + json(a.delta).dump());
  const auto t = invorbit::DeltaSigma(g, a.delta, weights, xi, limits);
  r.data = t.ToJson();
  r.data["group"] = a.group;
  std::ostringstream csv, text;
  if (!t.weighted) {
    csv << "radius,delta,sigma,witness\n";
    for (size_t i = 0; i < t.delta.size(); ++i) {
      csv << i << "," << t.delta[i] << "," << t.sigma[i] << "," << t.witness[i]
          << "\n";
    }
    text << "delta " << JoinNumbers(t.delta) << "\n"
         << "sigma " << JoinNumbers(t.sigma) << "\n";
  } else {
    text << "delta " << t.delta_max << " sigma " << t.sigma_max << "\n";
  }
  r.csv = csv.str();
  r.text = text.str();
  return r;
}

Result RunOmegaBuild(const Context& ctx, const std::string& profile_spec,
                     long long k) {
  const auto profile = metrics::GrowthProfile::Parse(profile_spec);
  ctx.Progress("building omega for " + profile.name() + " with k=" +
               std::to_string(k));
  const auto res = metrics::OmegaBuild(profile, k);
  Result r;
  r.data = res.ToJson();
  r.data["profile"] = profile_spec;
  std::ostringstream text, csv;
  text << res.Syllables() << "\n"
       << "fraction_012 " << json(res.Fraction012()).dump() << "\n"
       << "windows " << (res.windows_ok ? "ok" : "FAILED") << "\n";
  csv << "k,after_012,log_g,target,lo,hi,ok\n";
  for (const auto& b : res.boundaries) {
    csv << b.k << "," << b.after_012 << "," << json(b.log_g).dump() << ","
        << json(b.target).dump() << "," << json(b.lo).dump() << ","
        << json(b.hi).dump() << "," << b.ok << "\n";
  }
  r.text = text.str();
  r.csv = csv.str();
  if (!res.windows_ok) r.code = kCheckFailed;
  return r;
}

Result RunSupercontract(const Context& ctx, const std::string& omega,
                        int letters, const std::string& tail) {
  ctx.Progress("super-contraction check up to " + std::to_string(letters) +
               " letters");
  const auto rep = metrics::SupercontractCheck(
      OmegaSeq::Parse(omega), selfsim::Preset::kFamily, letters, tail);
  Result r;
  r.data = rep.ToJson();
  r.data["omega"] = omega;
  r.text = "elements " + std::to_string(rep.elements) + " violations " +
           std::to_string(rep.violations) + " conjugate_failures " +
           std::to_string(rep.conjugate_failures) + "\n";
  if (rep.violations > 0 || rep.conjugate_failures > 0) r.code = kCheckFailed;
  return r;
}

Result RunNuegCompare(const Context& ctx, int i, int j, int radius) {
  ctx.CheckRadius(radius);
  ctx.Progress("comparing Cayley balls for x_" + std::to_string(i) + " and x_" +
               std::to_string(j));
  const auto c = permwreath::CompareBalls(i, j, radius, ctx.cfg().budget);
  Result r;
  r.data = {{"i", i},
            {"j", j},
            {"radius", radius},
            {"equal", c.equal},
            {"size_i", c.size_i},
            {"size_j", c.size_j}};
  r.text = std::string(c.equal ? "equal" : "different") + "\n";
  return r;
}

Result RunDlCheck(const Context& ctx, int q, int radius) {
  ctx.CheckRadius(radius);
  ctx.Progress("Diestel-Leader check q=" + std::to_string(q) + " R=" +
               std::to_string(radius));
  const auto rep = wreath::DlCheck(q, radius);
  Result r;
  r.data = rep.ToJson();
  r.data["q"] = q;
  r.text = "vertices " + std::to_string(rep.vertices) + " edges " +
           std::to_string(rep.edges_checked) + " mismatches " +
           std::to_string(rep.mismatches) + "\n";
  if (!rep.ok()) r.code = kCheckFailed;
  return r;
}

Result RunKHills(const Context& ctx, int q, const std::vector<int>& ks) {
  Result r;
  json reports = json::array();
  std::ostringstream text, csv;
  csv << "q,k,radius,words,at_norm,tops,higher_tops,ok\n";
  bool ok = true;
  for (int k : ks) {
    ctx.CheckRadius(5 * k + 1);
    ctx.Progress("k-hills k=" + std::to_string(k));
    const auto rep = growth::LamplighterKHillCheck(q, k, ctx.cfg().budget);
    reports.push_back(rep.ToJson());
    ok = ok && rep.ok();
    text << "k=" << k << " words " << rep.words << " tops " << rep.tops
         << " higher " << rep.higher_tops << (rep.ok() ? " ok" : " FAILED") << "\n";
    csv << q << "," << k << "," << rep.radius << "," << rep.words << ","
        << rep.at_norm << "," << rep.tops << "," << rep.higher_tops << ","
        << rep.ok() << "\n";
  }
  r.data = {{"q", q}, {"reports", reports}, {"ok", ok}};
  r.text = text.str();
  r.csv = csv.str();
  if (!ok) r.code = kCheckFailed;
  return r;
}

void Emit(const Result& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.data.dump(2) << "\n";
  } else if (format == "csv") {
    out << (r.csv.empty() ? ScalarCsv(r.data) : r.csv);
  } else {
    out << (r.text.empty() ? r.data.dump(2) + "\n" : r.text);
  }
}

}  // namespace

void RunConfig::Validate() const {
  if (budget <= 0) throw DomainError("budget must be positive");
  if (max_radius <= 0) throw DomainError("max-radius must be positive");
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
  if (format != "json" && format != "csv" && format != "text") {
    throw DomainError("format must be json, csv or text");
  }
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Growth computations for wreath products and Grigorchuk groups",
               "wgrowth"};
  app.require_subcommand(1);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "TOML config file (keys: budget, max-radius, "
                 "tolerance, cache-dir, format, quiet)");
  RunConfig cfg;
  app.add_option("--budget", cfg.budget, "element budget")->capture_default_str();
  app.add_option("--max-radius", cfg.max_radius, "largest accepted radius")
      ->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "numeric tolerance")
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory")
      ->envname("WGROWTH_CACHE_DIR");
  app.add_option("--format", cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_flag("--quiet", cfg.quiet, "no progress messages");

  std::function<Result(const Context&)> run;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string group = "grigorchuk:fsa";
  std::string word;
  std::vector<std::string> words;
  CLI::App* mul = sub("mul", "multiply words in a Grigorchuk group");
  mul->add_option("--group", group)->capture_default_str();
  mul->add_option("words", words, "words over a,b,c,d")->required();
  mul->callback([&] { run = [&](const Context& c) { return RunMul(c, group, words); }; });

  CLI::App* wp = sub("wp", "word problem");
  wp->add_option("--group", group)->capture_default_str();
  wp->add_option("--word", word)->required();
  wp->callback([&] { run = [&](const Context& c) { return RunWp(c, group, word); }; });

  CLI::App* order = sub("order", "order of an element");
  order->add_option("--group", group)->capture_default_str();
  order->add_option("--word", word)->required();
  order->callback([&] { run = [&](const Context& c) { return RunOrder(c, group, word); }; });

  CLI::App* portrait = sub("portrait", "canonical portrait of an element");
  portrait->add_option("--group", group)->capture_default_str();
  portrait->add_option("--word", word)->required();
  portrait->callback(
      [&] { run = [&](const Context& c) { return RunPortrait(c, group, word); }; });

  BallArgs ball_args;
  CLI::App* ball = sub("ball", "Cayley ball and sphere sizes");
  ball->add_option("--group", ball_args.group)->required();
  ball->add_option("--radius", ball_args.radius)->required();
  ball->add_option("--weights", ball_args.weights_file,
                   "JSON file: array of weights or object label -> weight");
  ball->add_flag("--edges", ball_args.edges, "include the Cayley graph edges");
  ball->callback([&] { run = [&](const Context& c) { return RunBall(c, ball_args); }; });

  int level = 0;
  std::string preset = "fsa";
  CLI::App* diameter = sub("diameter", "diameter of the level-n quotient");
  diameter->add_option("--level", level)->required();
  diameter->add_option("--preset", preset)->capture_default_str();
  diameter->callback(
      [&] { run = [&](const Context& c) { return RunDiameter(c, level, preset); }; });

  SeriesArgs series_args;
  CLI::App* ser = sub("series", "growth series");
  ser->add_option("combinator", series_args.combinator)->required();
  ser->add_option("--order", series_args.order)->required();
  ser->add_option("--lamp", series_args.h, "finite lamp group")->capture_default_str();
  ser->add_option("--lamp2", series_args.h2, "second finite group")->capture_default_str();
  ser->add_option("--acting", series_args.g, "finite acting group")->capture_default_str();
  ser->add_option("--m1", series_args.m1, "copies of C2")->capture_default_str();
  ser->add_option("--m2", series_args.m2, "copies of Z")->capture_default_str();
  ser->add_option("--d", series_args.d, "size of X")->capture_default_str();
  ser->callback([&] { run = [&](const Context& c) { return RunSeries(c, series_args); }; });

  std::string basepoint = "xi";
  int limit = 64;
  int schreier_radius = -1;
  CLI::App* sch = sub("schreier", "Schreier graph on the orbit of 1^inf");
  sch->add_option("--group", group)->capture_default_str();
  sch->add_option("--basepoint", basepoint, "'xi' or a binary word u for 1^inf u")
      ->capture_default_str();
  sch->add_option("--limit", limit)->capture_default_str();
  sch->add_option("--radius", schreier_radius);
  sch->callback([&] {
    run = [&](const Context& c) {
      return RunSchreier(c, group, basepoint, limit, schreier_radius);
    };
  });

  InvorbitArgs inv;
  CLI::App* invc = sub("invorbit", "inverted orbits");
  invc->add_option("--group", inv.group)->capture_default_str();
  invc->add_option("--word", inv.word);
  invc->add_option("--delta", inv.delta, "radius for the Delta/Sigma table");
  invc->add_option("--weights", inv.weights, "weights of a,b,c,d, comma separated");
  invc->add_option("--witness", inv.witness, "witness word at depth k");
  invc->add_option("--omega", inv.omega)->capture_default_str();
  invc->add_option("--basepoint", inv.basepoint)->capture_default_str();
  invc->add_flag("--include-word", inv.include_word);
  invc->callback([&] {
    inv.has_word = invc->count("--word") > 0;
    run = [&](const Context& c) { return RunInvorbit(c, inv); };
  });

  std::string profile;
  long long k_max = 3000;
  CLI::App* ob = sub("omega-build", "omega for a prescribed growth profile");
  ob->add_option("--profile", profile,
                 "exp, exp_pow:alpha=, exp_over_log:c=, exp_over_loglog:c=, "
                 "table:<csv>")
      ->required();
  ob->add_option("--k", k_max, "number of letters")->capture_default_str();
  ob->callback(
      [&] { run = [&](const Context& c) { return RunOmegaBuild(c, profile, k_max); }; });

  std::string omega = "periodic:012";
  std::string tail = "012";
  int letters = 8;
  CLI::App* sc = sub("supercontract", "super-contraction inequality check");
  sc->add_option("--omega", omega)->capture_default_str();
  sc->add_option("--letters", letters)->capture_default_str();
  sc->add_option("--tail", tail, "negative part of omega")->capture_default_str();
  sc->callback([&] {
    run = [&](const Context& c) { return RunSupercontract(c, omega, letters, tail); };
  });

  int ni = 0, nj = 0, nr = 3;
  CLI::App* nueg = sub("nueg-compare", "compare Cayley balls for S_i and S_j");
  nueg->add_option("--i", ni)->required();
  nueg->add_option("--j", nj)->required();
  nueg->add_option("--radius", nr)->capture_default_str();
  nueg->callback([&] { run = [&](const Context& c) { return RunNuegCompare(c, ni, nj, nr); }; });

  int q = 2, dl_radius = 4;
  std::string dl_group;
  CLI::App* dl = sub("dl-check", "Cayley graph of F wr Z against DL(q, q)");
  dl->add_option("--q", q)->capture_default_str();
  dl->add_option("--group", dl_group, "lamplighter:q=<int>, overrides --q");
  dl->add_option("--radius", dl_radius)->capture_default_str();
  dl->callback([&] {
    run = [&](const Context& c) {
      if (!dl_group.empty()) q = wreath::ParseLamplighterSpec(dl_group);
      return RunDlCheck(c, q, dl_radius);
    };
  });

  std::vector<int> ks = {1, 2, 3};
  CLI::App* kh = sub("khills", "k-hill tops in C_q wr Z");
  kh->add_option("--q", q)->capture_default_str();
  kh->add_option("--k", ks, "values of k")->delimiter(',')->capture_default_str();
  kh->callback([&] { run = [&](const Context& c) { return RunKHills(c, q, ks); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wgrowth: " << e.what() << "\n";
    // Help of the subcommand that failed, else of the whole program.
    const CLI::App* failed = &app;
    for (const CLI::App* s : app.get_subcommands()) failed = s;
    err << failed->help();
    return kUsageError;
  }
  try {
    cfg.Validate();
    const Context ctx(cfg, err);
    const auto start = std::chrono::steady_clock::now();
    const Result r = run(ctx);
    Emit(r, cfg.format, out);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    ctx.Progress("done in " + std::to_string(secs) + " s");
    return r.code;
  } catch (const ResourceError& e) {
    err << "wgrowth: resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const ContractViolation& e) {
    err << "wgrowth: check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const DomainError& e) {
    err << "wgrowth: " << e.what() << "\n";
    return kUsageError;
  } catch (const cache::CacheError& e) {
    err << "wgrowth: cache: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "wgrowth: " << e.what() << "\n";
    return kResourceError;
  } catch (const json::exception& e) {
    err << "wgrowth: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace cli
}  // namespace wreathgrowth

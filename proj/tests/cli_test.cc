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

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "wreathgrowth/backends.h"
#include "wreathgrowth/cache.h"
#include "wreathgrowth/errors.h"
#include "wreathgrowth/growth.h"
#include "wreathgrowth/series.h"

namespace wreathgrowth {
namespace {

namespace fs = std::filesystem;
using cache::CacheError;

growth::BallRecord FreeBall(int radius, bool edges = false) {
  growth::BallOptions opt;
  opt.edges = edges;
  return growth::EnumerateBall(growth::FreeLikeBackend(0, 2), radius, opt);
}

TEST(CacheTest, BallRoundTrip) {
  const auto ball = FreeBall(6, true);
  const std::string key = cache::BallKey("free:k=2", 6, "");
  const std::string bytes = cache::EncodeBall(key, ball);
  const auto back = cache::DecodeBall(bytes, key);
  EXPECT_EQ(back.spheres, ball.spheres);
  EXPECT_EQ(back.keys, ball.keys);
  EXPECT_EQ(back.norms, ball.norms);
  EXPECT_EQ(back.labels, ball.labels);
  EXPECT_EQ(back.edges, ball.edges);
  EXPECT_EQ(back.index, ball.index);
  EXPECT_EQ(cache::EncodeBall(key, back), bytes);
}

TEST(CacheTest, WeightedBallRoundTripIsBitExact) {
  const selfsim::GrigGroup g(selfsim::Preset::kFsa);
  const growth::GrigBackend backend(g, {"a", "b", "c", "d"}, {1.0, 0.1, 0.2, 0.3});
  const auto ball = growth::EnumerateWeightedBall(backend, 3.3);
  const std::string key = cache::BallKey("grigorchuk:fsa", 3.3,
                                         cache::WeightsDigest({1.0, 0.1, 0.2, 0.3}));
  const auto back = cache::DecodeBall(cache::EncodeBall(key, ball), key);
  ASSERT_EQ(back.weighted_norms.size(), ball.weighted_norms.size());
  for (size_t i = 0; i < ball.weighted_norms.size(); ++i) {
    EXPECT_EQ(std::memcmp(&back.weighted_norms[i], &ball.weighted_norms[i],
                          sizeof(double)),
              0);
  }
  EXPECT_EQ(back.weighted_radius, 3.3);
}

TEST(CacheTest, SeriesRoundTrip) {
  const auto s = series::ParryWreath(series::Series::FromInts(10, {1, 1}), 0, 1, 10);
  const std::string key = cache::SeriesKey("parry|h=C2", 10);
  EXPECT_EQ(cache::DecodeSeries(cache::EncodeSeries(key, s), key), s);
  const series::Series half(2, {Rational(1, 2), Rational(-3, 7), Rational(0)});
  EXPECT_EQ(cache::DecodeSeries(cache::EncodeSeries(key, half), key), half);
}

TEST(CacheTest, KeysSeparateInputs) {
  const std::string w1 = cache::WeightsDigest({1.0, 0.5});
  const std::string w2 = cache::WeightsDigest({1.0, 0.5000001});
  EXPECT_NE(w1, w2);
  EXPECT_EQ(w1, cache::WeightsDigest({1.0, 0.5}));
  EXPECT_NE(cache::BallKey("g", 3, w1), cache::BallKey("g", 3, w2));
  EXPECT_NE(cache::BallKey("g", 3, w1), cache::BallKey("g", 4, w1));
  EXPECT_NE(cache::BallKey("g", 3, w1), cache::BallKey("h", 3, w1));
  EXPECT_NE(cache::BallKey("g", 3, w1, 1), cache::BallKey("g", 3, w1, 2));
  EXPECT_EQ(cache::Sha1Hex("abc"), "a9993e364706816aba3e25717850c26c9cd0d89d");
}

TEST(CacheTest, VersionBumpInvalidates) {
  const auto ball = FreeBall(3);
  const std::string key = cache::BallKey("free:k=2", 3, "");
  const std::string old = cache::EncodeBall(key, ball, 1);
  EXPECT_THROW(cache::DecodeBall(old, key, 2), CacheError);
  EXPECT_NO_THROW(cache::DecodeBall(old, key, 1));
}

TEST(CacheTest, CorruptionDetected) {
  const auto ball = FreeBall(4);
  const std::string key = cache::BallKey("free:k=2", 4, "");
  const std::string bytes = cache::EncodeBall(key, ball);
  for (size_t pos : {size_t{0}, size_t{5}, bytes.size() / 2, bytes.size() - 1}) {
    std::string bad = bytes;
    bad[pos] ^= 0x40;
    EXPECT_THROW(cache::DecodeBall(bad, key), CacheError) << pos;
  }
  EXPECT_THROW(cache::DecodeBall(bytes.substr(0, 30), key), CacheError);
  EXPECT_THROW(cache::DecodeBall("", key), CacheError);
  EXPECT_THROW(cache::DecodeBall(bytes, key + "x"), CacheError);
  EXPECT_THROW(cache::DecodeSeries(bytes, key), CacheError);
}

TEST(CacheTest, StoreWritesAndReads) {
  const fs::path dir = fs::temp_directory_path() / "wgrowth_cache_test";
  fs::remove_all(dir);
  cache::Store store(dir.string());
  EXPECT_FALSE(store.Read("k", "ball"));
  store.Write("k", "ball", std::string("\0\1\2", 3));
  EXPECT_EQ(*store.Read("k", "ball"), std::string("\0\1\2", 3));
  fs::remove_all(dir);
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "--quiet");
  const int code = cli::Dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(DispatchTest, SpecExamples) {
  CliRun r = Cli({"--format", "text", "wp", "--group", "grigorchuk:fsa", "--word",
               "adadadad"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "trivial\n");
  r = Cli({"diameter", "--level", "3"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["diameter"], 8);
  EXPECT_EQ(j["order"], 128);
  r = Cli({"ball", "--group", "free:k=2", "--radius", "2"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["spheres"],
            nlohmann::json::parse("[1,4,12]"));
}

TEST(DispatchTest, ExitCodes) {
  EXPECT_EQ(Cli({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(Cli({"ball", "--radius", "2"}).code, cli::kUsageError);
  EXPECT_EQ(Cli({"wp", "--word", "xyz"}).code, cli::kUsageError);
  EXPECT_EQ(Cli({"invorbit", "--word", "a", "--delta", "2"}).code,
            cli::kUsageError);
  EXPECT_EQ(Cli({"--budget", "10", "ball", "--group", "free:k=2", "--radius", "5"})
                .code,
            cli::kResourceError);
  EXPECT_EQ(Cli({"diameter", "--level", "7"}).code, cli::kResourceError);
  const CliRun help = Cli({"ball", "--help"});
  EXPECT_EQ(help.code, cli::kOk);
  EXPECT_NE(help.out.find("--radius"), std::string::npos);
}

TEST(DispatchTest, ChecksReportStatus) {
  EXPECT_EQ(Cli({"dl-check", "--q", "2", "--radius", "2"}).code, cli::kOk);
  EXPECT_EQ(Cli({"khills", "--k", "1"}).code, cli::kOk);
  EXPECT_EQ(Cli({"omega-build", "--profile", "exp", "--k", "100"}).code, cli::kOk);
  EXPECT_EQ(Cli({"omega-build", "--profile", "exp_pow:alpha=0.5"}).code,
            cli::kUsageError);
}

TEST(DispatchTest, Deterministic) {
  const std::vector<std::string> args = {"ball", "--group",
                                         "lamplighter:q=2", "--radius", "6",
                                         "--edges"};
  EXPECT_EQ(Cli(args).out, Cli(args).out);
}

TEST(RunConfigTest, Validate) {
  cli::RunConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.budget = 0;
  EXPECT_THROW(cfg.Validate(), DomainError);
  cfg = {};
  cfg.max_radius = -1;
  EXPECT_THROW(cfg.Validate(), DomainError);
  cfg = {};
  cfg.tolerance = 0;
  EXPECT_THROW(cfg.Validate(), DomainError);
  cfg = {};
  cfg.format = "xml";
  EXPECT_THROW(cfg.Validate(), DomainError);
}

}  // namespace
}  // namespace wreathgrowth

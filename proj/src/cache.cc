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

#include "wreathgrowth/cache.h"

#include <boost/uuid/detail/sha1.hpp>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wreathgrowth {
namespace cache {
namespace {

constexpr char kMagic[4] = {'W', 'G', 'C', 'R'};
constexpr uint8_t kBallKind = 1;
constexpr uint8_t kSeriesKind = 2;
constexpr size_t kDigestBytes = 20;

std::string RawSha1(std::string_view data) {
  boost::uuids::detail::sha1 h;
  h.process_bytes(data.data(), data.size());
  boost::uuids::detail::sha1::digest_type d;
  h.get_digest(d);
  std::string out;
  for (unsigned int word : d) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((word >> s) & 0xff));
  }
  return out;
}

class Writer {
 public:
  template <typename T>
  void Pod(const T& v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out_.append(buf, sizeof(T));
  }
  void Str(const std::string& s) {
    Pod<uint64_t>(s.size());
    out_ += s;
  }
  template <typename T>
  void PodVec(const std::vector<T>& v) {
    Pod<uint64_t>(v.size());
    for (const T& x : v) Pod(x);
  }
  void StrVec(const std::vector<std::string>& v) {
    Pod<uint64_t>(v.size());
    for (const auto& s : v) Str(s);
  }
  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  template <typename T>
  T Pod() {
    Need(sizeof(T));
    T v;
    std::memcpy(&v, in_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  std::string Str() {
    const uint64_t n = Pod<uint64_t>();
    Need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  template <typename T>
  std::vector<T> PodVec() {
    const uint64_t n = Pod<uint64_t>();
    Need(n * sizeof(T));
    std::vector<T> v(n);
    for (auto& x : v) x = Pod<T>();
    return v;
  }
  std::vector<std::string> StrVec() {
    const uint64_t n = Pod<uint64_t>();
    Need(n * sizeof(uint64_t));
    std::vector<std::string> v(n);
    for (auto& s : v) s = Str();
    return v;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void Need(uint64_t n) const {
    if (n > in_.size() - pos_) throw CacheError("truncated cache record");
  }
  std::string_view in_;
  size_t pos_ = 0;
};

void Header(Writer& w, uint8_t kind, const std::string& key, uint32_t version) {
  w.bytes().append(kMagic, 4);
  w.Pod(version);
  w.Pod(kind);
  w.Str(key);
}

std::string Seal(Writer& w) {
  std::string out = std::move(w.bytes());
  out += RawSha1(out);
  return out;
}

// Checks the digest and the magic; returns the rest of the body.
std::string_view Open(std::string_view bytes) {
  if (bytes.size() < 4 + kDigestBytes) throw CacheError("truncated cache record");
  const std::string_view body = bytes.substr(0, bytes.size() - kDigestBytes);
  if (RawSha1(body) != bytes.substr(body.size())) {
    throw CacheError("cache record checksum mismatch");
  }
  if (std::memcmp(body.data(), kMagic, 4) != 0) throw CacheError("bad magic");
  return body.substr(4);
}

void CheckHeader(Reader& r, uint8_t kind, const std::string& key,
                 uint32_t version) {
  const auto v = r.Pod<uint32_t>();
  if (v != version) {
    throw CacheError("cache format version " + std::to_string(v) +
                     ", expected " + std::to_string(version));
  }
  if (r.Pod<uint8_t>() != kind) throw CacheError("wrong record kind");
  if (r.Str() != key) throw CacheError("cache key mismatch");
}

}  // namespace

std::string Sha1Hex(std::string_view data) {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : RawSha1(data)) {
    out.push_back(kHex[c >> 4]);
    out.push_back(kHex[c & 15]);
  }
  return out;
}

std::string WeightsDigest(const std::vector<double>& weights) {
  if (weights.empty()) return "";
  Writer w;
  w.PodVec(weights);
  return Sha1Hex(w.bytes());
}

std::string BallKey(const std::string& group, double radius,
                    const std::string& weights_digest, uint32_t version) {
  std::ostringstream os;
  os << "ball|v" << version << "|" << group << "|";
  os << std::hexfloat << radius << "|" << weights_digest;
  return Sha1Hex(os.str());
}

std::string SeriesKey(const std::string& spec, int order, uint32_t version) {
  return Sha1Hex("series|v" + std::to_string(version) + "|" + spec + "|" +
                 std::to_string(order));
}

std::string EncodeBall(const std::string& key, const growth::BallRecord& b,
                       uint32_t version) {
  Writer w;
  Header(w, kBallKind, key, version);
  w.Pod<int32_t>(b.radius);
  w.Pod(b.weighted_radius);
  w.PodVec(b.spheres);
  w.StrVec(b.keys);
  w.PodVec(b.norms);
  w.PodVec(b.weighted_norms);
  w.StrVec(b.labels);
  w.Pod<uint8_t>(b.has_edges);
  w.PodVec(b.edges);
  return Seal(w);
}

growth::BallRecord DecodeBall(std::string_view bytes, const std::string& key,
                              uint32_t version) {
  Reader r(Open(bytes));
  CheckHeader(r, kBallKind, key, version);
  growth::BallRecord b;
  b.radius = r.Pod<int32_t>();
  b.weighted_radius = r.Pod<double>();
  b.spheres = r.PodVec<int64_t>();
  b.keys = r.StrVec();
  b.norms = r.PodVec<int>();
  b.weighted_norms = r.PodVec<double>();
  b.labels = r.StrVec();
  b.has_edges = r.Pod<uint8_t>() != 0;
  b.edges = r.PodVec<int>();
  if (!r.done()) throw CacheError("trailing bytes in cache record");
  for (size_t i = 0; i < b.keys.size(); ++i) {
    b.index.emplace(b.keys[i], static_cast<int>(i));
  }
  return b;
}

std::string EncodeSeries(const std::string& key, const series::Series& s,
                         uint32_t version) {
  Writer w;
  Header(w, kSeriesKind, key, version);
  w.Pod<int32_t>(s.order());
  std::vector<std::string> coeffs;
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  w.StrVec(coeffs);
  return Seal(w);
}

series::Series DecodeSeries(std::string_view bytes, const std::string& key,
                            uint32_t version) {
  Reader r(Open(bytes));
  CheckHeader(r, kSeriesKind, key, version);
  const int order = r.Pod<int32_t>();
  const auto text = r.StrVec();
  if (order < 0 || text.size() != static_cast<size_t>(order) + 1 || !r.done()) {
    throw CacheError("malformed series record");
  }
  std::vector<Rational> c;
  try {
    for (const auto& t : text) c.emplace_back(t);
  } catch (const std::exception&) {
    throw CacheError("malformed series coefficient");
  }
  return series::Series(order, std::move(c));
}

std::string Store::Path(const std::string& key, const std::string& suffix) const {
  return (std::filesystem::path(dir_) / (key + "." + suffix)).string();
}

std::optional<std::string> Store::Read(const std::string& key,
                                       const std::string& suffix) const {
  std::ifstream in(Path(key, suffix), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void Store::Write(const std::string& key, const std::string& suffix,
                  const std::string& bytes) const {
  std::filesystem::create_directories(dir_);
  const std::string path = Path(key, suffix);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw CacheError("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cache
}  // namespace wreathgrowth

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

// Versioned on-disk records for balls and series.  A file holds a header
// (magic, format version, record key), the payload, and a SHA-1 of
// everything before it.

#ifndef WREATHGROWTH_CACHE_H_
#define WREATHGROWTH_CACHE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wreathgrowth/growth.h"
#include "wreathgrowth/series.h"

namespace wreathgrowth {
namespace cache {

inline constexpr uint32_t kFormatVersion = 1;

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Sha1Hex(std::string_view data);

// Digest of a weight vector (exact bit patterns); "" for no weights.
std::string WeightsDigest(const std::vector<double>& weights);

std::string BallKey(const std::string& group, double radius,
                    const std::string& weights_digest,
                    uint32_t version = kFormatVersion);
std::string SeriesKey(const std::string& spec, int order,
                      uint32_t version = kFormatVersion);

std::string EncodeBall(const std::string& key, const growth::BallRecord& ball,
                       uint32_t version = kFormatVersion);
// Throws CacheError on a damaged file, a version or a key mismatch.
growth::BallRecord DecodeBall(std::string_view bytes, const std::string& key,
                              uint32_t version = kFormatVersion);

std::string EncodeSeries(const std::string& key, const series::Series& s,
                         uint32_t version = kFormatVersion);
series::Series DecodeSeries(std::string_view bytes, const std::string& key,
                            uint32_t version = kFormatVersion);

// Files named <key>.<suffix> in one directory.
class Store {
 public:
  explicit Store(std::string dir) : dir_(std::move(dir)) {}
  const std::string& dir() const { return dir_; }
  std::string Path(const std::string& key, const std::string& suffix) const;
  std::optional<std::string> Read(const std::string& key,
                                  const std::string& suffix) const;
  // Writes through a temporary file and a rename.
  void Write(const std::string& key, const std::string& suffix,
             const std::string& bytes) const;

 private:
  std::string dir_;
};

}  // namespace cache
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_CACHE_H_

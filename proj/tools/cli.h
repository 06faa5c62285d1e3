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

// The wgrowth command line: subcommand dispatch, run configuration, ball
// and series caching, and output formatting.

#ifndef WREATHGROWTH_TOOLS_CLI_H_
#define WREATHGROWTH_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wreathgrowth {
namespace cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kResourceError = 3,
};

// Shared settings.  Config-file keys: budget, max-radius, tolerance,
// cache-dir, format, quiet.  Command-line flags override the file; the
// cache directory may also come from WGROWTH_CACHE_DIR.
struct RunConfig {
  int64_t budget = 10'000'000;
  int max_radius = 64;
  double tolerance = 1e-9;
  std::string cache_dir;
  std::string format = "json";  // json | csv | text
  bool quiet = false;

  // Throws DomainError unless every limit is positive and the format known.
  void Validate() const;
};

// args excludes the program name.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace cli
}  // namespace wreathgrowth

#endif  // WREATHGROWTH_TOOLS_CLI_H_

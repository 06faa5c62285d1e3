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

// Sequences over {0,1,2} given by finitely many syllables followed by a
// periodic tail.

#ifndef WREATHGROWTH_OMEGA_H_
#define WREATHGROWTH_OMEGA_H_

#include <string>
#include <utility>
#include <vector>

namespace wreathgrowth {

class OmegaSeq {
 public:
  struct Syllable {
    std::string block;  // non-empty word over {0,1,2}
    int repeat = 1;
    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  OmegaSeq() : OmegaSeq({}, "012") {}
  OmegaSeq(std::vector<Syllable> syllables, std::string tail);
  static OmegaSeq Periodic(const std::string& word) { return {{}, word}; }
  // "periodic:<word>" or "syllables:(012)^3 2^5 ... tail=<word>".
  static OmegaSeq Parse(const std::string& spec);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  const std::string& tail() const { return tail_; }

  int Letter(long long i) const;
  std::string Prefix(long long n) const;
  long long prefix_length() const { return prefix_.size(); }
  // Drops the first k letters.
  OmegaSeq Shift(long long k) const;
  // Shift index reduced modulo the tail period once inside the tail.
  long long CanonicalShift(long long i) const;
  // Number of distinct canonical shifts.
  long long NumShiftClasses() const {
    return prefix_length() + static_cast<long long>(tail_.size());
  }
  // Tail contains each of 0, 1, 2.
  bool InOmegaPrime() const;
  std::string ToString() const;

  friend bool operator==(const OmegaSeq& a, const OmegaSeq& b) {
    return a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
  }

 private:
  std::vector<Syllable> syllables_;
  std::string tail_;
  std::string prefix_;  // expanded syllables
};

// "(012)^3 2^5" style rendering of a finite word, grouping maximal runs
// of "012" blocks and of single letters.
std::string SyllableNotation(const std::string& word);

}  // namespace wreathgrowth

#endif  // WREATHGROWTH_OMEGA_H_

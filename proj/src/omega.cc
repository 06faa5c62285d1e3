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

#include "wreathgrowth/omega.h"

#include <sstream>

#include "wreathgrowth/errors.h"

namespace wreathgrowth {
namespace {

void CheckWord(const std::string& w, const char* what) {
  if (w.empty()) throw ParseError(std::string(what) + " must be non-empty");
  for (char c : w) {
    if (c < '0' || c > '2') {
      throw ParseError(std::string(what) + " must be a word over {0,1,2}");
    }
  }
}

}  // namespace

OmegaSeq::OmegaSeq(std::vector<Syllable> syllables, std::string tail)
    : syllables_(std::move(syllables)), tail_(std::move(tail)) {
  CheckWord(tail_, "tail");
  for (const auto& s : syllables_) {
    CheckWord(s.block, "syllable");
    if (s.repeat < 0) throw ParseError("negative syllable repeat");
    for (int r = 0; r < s.repeat; ++r) prefix_ += s.block;
  }
}

OmegaSeq OmegaSeq::Parse(const std::string& spec) {
  const std::string periodic = "periodic:", syl = "syllables:";
  if (spec.rfind(periodic, 0) == 0) {
    return Periodic(spec.substr(periodic.size()));
  }
  if (spec.rfind(syl, 0) != 0) {
    throw ParseError("omega spec must start with periodic: or syllables:");
  }
  std::istringstream is(spec.substr(syl.size()));
  std::vector<Syllable> syllables;
  std::string tail, tok;
  while (is >> tok) {
    if (tok.rfind("tail=", 0) == 0) {
      tail = tok.substr(5);
      continue;
    }
    Syllable s;
    std::string body = tok;
    const size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      body = tok.substr(0, caret);
      try {
        size_t used = 0;
        s.repeat = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad repeat count in " + tok);
      }
    }
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
      body = body.substr(1, body.size() - 2);
    }
    s.block = body;
    syllables.push_back(s);
  }
  if (tail.empty()) throw ParseError("syllables spec needs tail=<word>");
  return OmegaSeq(std::move(syllables), tail);
}

int OmegaSeq::Letter(long long i) const {
  if (i < 0) throw DomainError("negative omega index");
  if (i < prefix_length()) return prefix_[i] - '0';
  return tail_[(i - prefix_length()) % tail_.size()] - '0';
}

std::string OmegaSeq::Prefix(long long n) const {
  std::string s;
  for (long long i = 0; i < n; ++i) s += static_cast<char>('0' + Letter(i));
  return s;
}

OmegaSeq OmegaSeq::Shift(long long k) const {
  if (k <= prefix_length()) {
    std::vector<Syllable> rest;
    if (k < prefix_length()) rest.push_back({prefix_.substr(k), 1});
    return OmegaSeq(std::move(rest), tail_);
  }
  const size_t r = (k - prefix_length()) % tail_.size();
  return Periodic(tail_.substr(r) + tail_.substr(0, r));
}

long long OmegaSeq::CanonicalShift(long long i) const {
  if (i < prefix_length()) return i;
  return prefix_length() + (i - prefix_length()) % tail_.size();
}

bool OmegaSeq::InOmegaPrime() const {
  return tail_.find('0') != std::string::npos &&
         tail_.find('1') != std::string::npos &&
         tail_.find('2') != std::string::npos;
}

std::string OmegaSeq::ToString() const {
  if (prefix_.empty()) return "periodic:" + tail_;
  std::string s = "syllables:";
  for (const auto& syl : syllables_) {
    if (syl.repeat == 0) continue;
    s += (syl.block.size() > 1 ? "(" + syl.block + ")" : syl.block);
    if (syl.repeat != 1) s += "^" + std::to_string(syl.repeat);
    s += ' ';
  }
  return s + "tail=" + tail_;
}

std::string SyllableNotation(const std::string& word) {
  std::string out;
  size_t i = 0;
  while (i < word.size()) {
    if (!out.empty()) out += ' ';
    if (word.compare(i, 3, "012") == 0) {
      int n = 0;
      while (word.compare(i, 3, "012") == 0) {
        ++n;
        i += 3;
      }
      out += "(012)";
      if (n > 1) out += "^" + std::to_string(n);
    } else {
      const char c = word[i];
      int n = 0;
      while (i < word.size() && word[i] == c &&
             word.compare(i, 3, "012") != 0) {
        ++n;
        ++i;
      }
      out += c;
      if (n > 1) out += "^" + std::to_string(n);
    }
  }
  return out;
}

}  // namespace wreathgrowth

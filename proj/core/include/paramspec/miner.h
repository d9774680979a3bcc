// Copyright 2026 The paramspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Frequent embedded subtree mining over a forest of parse trees, with
// support counted in documents (parameter descriptions).

#ifndef PARAMSPEC_MINER_H_
#define PARAMSPEC_MINER_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "paramspec/deptree.h"

namespace paramspec {

enum class SupportComparator {
  kAtLeast,      // support >= min_support
  kGreaterThan,  // support > min_support
};

struct MinerOptions {
  size_t min_support = 1;
  size_t max_size = 7;
  SupportComparator comparator = SupportComparator::kAtLeast;
  int threads = 1;

  bool Frequent(size_t support) const {
    return comparator == SupportComparator::kAtLeast ? support >= min_support
                                                     : support > min_support;
  }
};

struct FrequentPattern {
  Subtree pattern;
  std::set<std::string> occurrences;  // document ids

  size_t support() const { return occurrences.size(); }
};

// doc id -> trees of that document's sentences
using Forest = std::map<std::string, std::vector<DepTree>>;

// Sorted by pattern. Empty forest gives an empty result.
std::vector<FrequentPattern> Mine(const Forest& forest, const MinerOptions& options);

// "<encoding>\t<support>" per line, in the order given.
std::string DumpPatterns(const std::vector<FrequentPattern>& patterns);

SupportComparator ParseComparator(const std::string& text);

}  // namespace paramspec

#endif  // PARAMSPEC_MINER_H_

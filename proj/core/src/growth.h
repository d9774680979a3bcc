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

// Rightmost-path pattern growth shared by the miner and by single-tree
// enumeration. Internal to the library.

#ifndef PARAMSPEC_SRC_GROWTH_H_
#define PARAMSPEC_SRC_GROWTH_H_

#include <cstddef>
#include <functional>
#include <vector>

#include "paramspec/deptree.h"

namespace paramspec::internal {

struct GrownPattern {
  Subtree pattern;
  std::vector<int> docs;  // sorted, distinct
};

// Grows every pattern of at most max_size nodes whose distinct-document
// count satisfies `keep`, extending only kept patterns. hosts[i] belongs to
// document doc_of[i]. Output is sorted by pattern and independent of
// `threads`.
std::vector<GrownPattern> GrowPatterns(const std::vector<MatchHost>& hosts,
                                       const std::vector<int>& doc_of, size_t max_size,
                                       const std::function<bool(size_t)>& keep,
                                       int threads);

}  // namespace paramspec::internal

#endif  // PARAMSPEC_SRC_GROWTH_H_

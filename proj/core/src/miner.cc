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

#include "paramspec/miner.h"

#include "growth.h"
#include "paramspec/errors.h"

namespace paramspec {

std::vector<FrequentPattern> Mine(const Forest& forest, const MinerOptions& options) {
  std::vector<FrequentPattern> out;
  if (options.min_support < 1 || options.max_size < 1) {
    throw Error("mine: min_support and max_size must be >= 1");
  }
  std::vector<std::string> doc_ids;
  std::vector<MatchHost> hosts;
  std::vector<int> doc_of;
  for (const auto& [id, trees] : forest) {
    for (const DepTree& t : trees) {
      hosts.push_back(MatchHost::FromTree(t));
      doc_of.push_back(static_cast<int>(doc_ids.size()));
    }
    doc_ids.push_back(id);
  }
  std::function<bool(size_t)> keep = [&options](size_t docs) { return options.Frequent(docs); };
  for (internal::GrownPattern& g :
       internal::GrowPatterns(hosts, doc_of, options.max_size, keep, options.threads)) {
    FrequentPattern fp;
    fp.pattern = std::move(g.pattern);
    for (int d : g.docs) fp.occurrences.insert(doc_ids[static_cast<size_t>(d)]);
    out.push_back(std::move(fp));
  }
  return out;
}

std::string DumpPatterns(const std::vector<FrequentPattern>& patterns) {
  std::string out;
  for (const FrequentPattern& p : patterns) {
    out += p.pattern.Encode();
    out += '\t';
    out += std::to_string(p.support());
    out += '\n';
  }
  return out;
}

SupportComparator ParseComparator(const std::string& text) {
  if (text == ">=") return SupportComparator::kAtLeast;
  if (text == ">") return SupportComparator::kGreaterThan;
  throw SchemaError("support_comparator", "expected \">=\" or \">\", got \"" + text + "\"");
}

}  // namespace paramspec

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

#include "paramspec/deptree.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "paramspec/errors.h"
#include "paramspec/io.h"
#include "paramspec/normalize.h"

namespace paramspec {
namespace {

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> cols;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    cols.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos
                                                                       : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

bool ParseInt(std::string_view s, int* out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
    if (v > 1000000) return false;
  }
  *out = v;
  return true;
}

}  // namespace

std::string NodeLabel(std::string_view form, std::string_view lemma) {
  if (AbstractKindFromName(form)) return std::string(form);
  std::string_view src = (lemma.empty() || lemma == "_") ? form : lemma;
  std::string out(src);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

DepTree DepTree::Build(std::string id, std::vector<DepNode> nodes) {
  DepTree t;
  t.id_ = std::move(id);
  const int n = static_cast<int>(nodes.size());
  if (n == 0) throw MalformedTreeError(t.id_, "empty tree");
  t.children_.assign(nodes.size(), {});
  for (int i = 0; i < n; ++i) {
    int h = nodes[static_cast<size_t>(i)].head;
    if (h < -1 || h >= n || h == i) {
      throw MalformedTreeError(t.id_, "token " + std::to_string(i + 1) + " has invalid head");
    }
    if (h == -1) {
      if (t.root_ != -1) throw MalformedTreeError(t.id_, "multiple roots");
      t.root_ = i;
    } else {
      t.children_[static_cast<size_t>(h)].push_back(i);
    }
  }
  if (t.root_ == -1) throw MalformedTreeError(t.id_, "no root (cyclic heads)");
  t.nodes_ = std::move(nodes);
  // Iterative preorder; a node not reached from the root sits on a cycle.
  t.pre_.assign(static_cast<size_t>(n), -1);
  t.end_.assign(static_cast<size_t>(n), -1);
  std::vector<std::pair<int, size_t>> stack = {{t.root_, 0}};
  t.pre_[static_cast<size_t>(t.root_)] = 0;
  t.order_.push_back(t.root_);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const std::vector<int>& kids = t.children_[static_cast<size_t>(v)];
    if (next < kids.size()) {
      int c = kids[next++];
      t.pre_[static_cast<size_t>(c)] = static_cast<int>(t.order_.size());
      t.order_.push_back(c);
      stack.push_back({c, 0});
    } else {
      t.end_[static_cast<size_t>(v)] = static_cast<int>(t.order_.size());
      stack.pop_back();
    }
  }
  if (static_cast<int>(t.order_.size()) != n) {
    throw MalformedTreeError(t.id_, "cyclic head chain");
  }
  return t;
}

std::map<std::string, DepTree> ParseConllu(std::string_view text) {
  std::map<std::string, DepTree> out;
  std::vector<DepNode> nodes;
  std::string sent_id;
  size_t block_line = 0;
  size_t line_no = 0;
  auto flush = [&]() {
    if (nodes.empty() && sent_id.empty()) return;
    if (sent_id.empty()) {
      throw SchemaError("line " + std::to_string(block_line), "sentence block without '# sent_id ='");
    }
    if (nodes.empty()) throw MalformedTreeError(sent_id, "no tokens");
    if (out.count(sent_id)) throw DuplicateError("duplicate sent_id '" + sent_id + "'");
    DepTree tree = DepTree::Build(sent_id, std::move(nodes));
    out.emplace(sent_id, std::move(tree));
    nodes.clear();
    sent_id.clear();
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (nodes.empty() && sent_id.empty()) block_line = line_no;
    if (line[0] == '#') {
      static constexpr std::string_view kKey = "# sent_id =";
      if (line.rfind(kKey, 0) == 0) {
        std::string_view v = std::string_view(line).substr(kKey.size());
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        sent_id = std::string(v);
      }
      continue;
    }
    std::vector<std::string> cols = SplitTabs(line);
    const std::string where = "line " + std::to_string(line_no);
    if (cols.size() != 10) throw SchemaError(where, "expected 10 tab-separated columns");
    if (cols[0].find_first_of("-.") != std::string::npos) continue;  // ranges, empty nodes
    int id = 0, head = 0;
    if (!ParseInt(cols[0], &id) || id != static_cast<int>(nodes.size()) + 1) {
      throw SchemaError(where, "token ids must be 1..n in order");
    }
    if (!ParseInt(cols[6], &head)) throw SchemaError(where, "HEAD is not an integer");
    DepNode node;
    node.form = cols[1];
    node.lemma = cols[2];
    node.deprel = cols[7];
    node.head = head - 1;
    node.label = NodeLabel(node.form, node.lemma);
    nodes.push_back(std::move(node));
  }
  flush();
  return out;
}

std::map<std::string, DepTree> LoadTrees(const std::filesystem::path& path) {
  return ParseConllu(ReadFile(path));
}

std::string SerializeConllu(const std::map<std::string, DepTree>& trees) {
  std::string out;
  for (const auto& [id, tree] : trees) {
    out += "# sent_id = " + id + "\n";
    for (size_t i = 0; i < tree.size(); ++i) {
      const DepNode& n = tree.node(static_cast<int>(i));
      out += std::to_string(i + 1) + "\t" + n.form + "\t" + n.lemma + "\t_\t_\t_\t" +
             std::to_string(n.head + 1) + "\t" + n.deprel + "\t_\t_\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace paramspec

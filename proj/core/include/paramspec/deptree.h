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

// Dependency parse trees, embedded subtree patterns, and matching.
//
// A pattern edge is DIRECT (maps to a parent-child edge) or ANCESTOR (maps to
// a downward path of length >= 1). Sibling order is preserved: if v1 precedes
// v2 among pattern siblings, the host subtree of v1's image ends before v2's
// image in preorder.

#ifndef PARAMSPEC_DEPTREE_H_
#define PARAMSPEC_DEPTREE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace paramspec {

struct DepNode {
  std::string label;  // abstract kind name, else lowercase lemma
  std::string form;
  std::string lemma;
  std::string deprel;
  int head = -1;  // node index, -1 for the root
};

class DepTree {
 public:
  DepTree() = default;

  // Nodes in surface order. Throws MalformedTreeError naming `id` when the
  // heads do not form a single rooted tree.
  static DepTree Build(std::string id, std::vector<DepNode> nodes);

  const std::string& id() const { return id_; }
  size_t size() const { return nodes_.size(); }
  const DepNode& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  const std::vector<DepNode>& nodes() const { return nodes_; }
  int root() const { return root_; }
  int parent(int i) const { return node(i).head; }
  // Children in surface order.
  const std::vector<int>& children(int i) const { return children_[static_cast<size_t>(i)]; }

  // Preorder position of node i and one past the last position of its
  // subtree; node_at(p) inverts pre().
  int pre(int i) const { return pre_[static_cast<size_t>(i)]; }
  int end(int i) const { return end_[static_cast<size_t>(i)]; }
  int node_at(int p) const { return order_[static_cast<size_t>(p)]; }

 private:
  std::string id_;
  std::vector<DepNode> nodes_;
  std::vector<std::vector<int>> children_;
  std::vector<int> pre_, end_, order_;
  int root_ = -1;
};

// Label of a CoNLL-U token: FORM when it names an abstract token kind,
// otherwise the lowercase LEMMA (FORM when LEMMA is "_").
std::string NodeLabel(std::string_view form, std::string_view lemma);

std::map<std::string, DepTree> ParseConllu(std::string_view text);
std::map<std::string, DepTree> LoadTrees(const std::filesystem::path& path);
std::string SerializeConllu(const std::map<std::string, DepTree>& trees);

enum class EdgeTag { kDirect, kAncestor };

struct PatternNode {
  std::string label;
  int parent = -1;
  EdgeTag tag = EdgeTag::kDirect;  // edge to parent; unused on the root

  bool operator==(const PatternNode&) const = default;
};

// Nodes are kept in preorder, so two patterns are equal iff their node lists
// are equal.
class Subtree {
 public:
  Subtree() = default;
  explicit Subtree(std::string root_label);

  size_t size() const { return nodes_.size(); }
  const PatternNode& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  const std::vector<PatternNode>& nodes() const { return nodes_; }
  std::vector<int> Children(int i) const;
  // Root first, last preorder node last.
  std::vector<int> RightmostPath() const;
  bool HasLabel(std::string_view label) const;

  // Adds a new last child under `parent`, which must lie on the rightmost
  // path.
  void Extend(int parent, EdgeTag tag, std::string label);

  // e.g. "D_STRUCTURE(/a //D_TYPE)". Characters \ ( ) / and space inside
  // labels are backslash escaped.
  std::string Encode() const;
  static Subtree Decode(std::string_view encoding);

  bool operator==(const Subtree& other) const { return nodes_ == other.nodes_; }
  bool operator<(const Subtree& other) const;

 private:
  std::vector<PatternNode> nodes_;
};

// Host structure for matching: preorder arrays over a parse tree or over a
// pattern (when testing pattern generality).
struct MatchHost {
  std::vector<std::string> label;
  std::vector<int> parent;
  std::vector<int> end;
  std::vector<char> direct;  // edge to parent counts as DIRECT
  std::vector<int> node_of;  // preorder position -> tree node index

  static MatchHost FromTree(const DepTree& tree);
  static MatchHost FromPattern(const Subtree& pattern);
  size_t size() const { return label.size(); }
};

bool Matches(const Subtree& pattern, const DepTree& tree);
bool Matches(const Subtree& pattern, const MatchHost& host);

// Leftmost embedding (lexicographically smallest image in host preorder),
// as tree node indices per pattern node.
std::optional<std::vector<int>> LeftmostEmbedding(const Subtree& pattern, const DepTree& tree);
// Every embedding, as tree node indices.
std::vector<std::vector<int>> AllEmbeddings(const Subtree& pattern, const DepTree& tree);

// True iff `general` embeds in `specific`, where a DIRECT edge of `general`
// must land on a DIRECT edge of `specific`.
bool PatternEmbeds(const Subtree& general, const Subtree& specific);

// All patterns with at most max_size nodes embeddable in `tree`.
std::set<Subtree> EnumerateEmbeddedSubtrees(const DepTree& tree, size_t max_size);

}  // namespace paramspec

#endif  // PARAMSPEC_DEPTREE_H_

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

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "growth.h"
#include "paramspec/deptree.h"
#include "paramspec/errors.h"

namespace paramspec {
namespace {

bool NeedsEscape(char c) { return c == '\\' || c == '(' || c == ')' || c == '/' || c == ' '; }

void EncodeNode(const Subtree& p, const std::vector<std::vector<int>>& kids, int v,
                std::string* out) {
  for (char c : p.node(v).label) {
    if (NeedsEscape(c)) *out += '\\';
    *out += c;
  }
  const std::vector<int>& ch = kids[static_cast<size_t>(v)];
  if (ch.empty()) return;
  *out += '(';
  for (size_t i = 0; i < ch.size(); ++i) {
    if (i) *out += ' ';
    *out += p.node(ch[i]).tag == EdgeTag::kDirect ? "/" : "//";
    EncodeNode(p, kids, ch[i], out);
  }
  *out += ')';
}

class Decoder {
 public:
  explicit Decoder(std::string_view s) : s_(s) {}

  Subtree Run() {
    Subtree p(Label());
    Children(&p, 0);
    if (i_ != s_.size()) Fail("trailing characters");
    return p;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) {
    throw SchemaError("pattern '" + std::string(s_) + "'", what + " at offset " + std::to_string(i_));
  }

  std::string Label() {
    std::string out;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '\\') {
        if (i_ + 1 >= s_.size()) Fail("dangling escape");
        out += s_[i_ + 1];
        i_ += 2;
        continue;
      }
      if (NeedsEscape(c)) break;
      out += c;
      ++i_;
    }
    if (out.empty()) Fail("empty label");
    return out;
  }

  void Children(Subtree* p, int parent) {
    if (i_ >= s_.size() || s_[i_] != '(') return;
    ++i_;
    bool first = true;
    while (true) {
      if (i_ < s_.size() && s_[i_] == ')') {
        if (first) Fail("empty child list");
        ++i_;
        return;
      }
      if (!first) {
        if (i_ >= s_.size() || s_[i_] != ' ') Fail("expected ' '");
        ++i_;
      }
      first = false;
      if (i_ >= s_.size() || s_[i_] != '/') Fail("expected '/'");
      ++i_;
      EdgeTag tag = EdgeTag::kDirect;
      if (i_ < s_.size() && s_[i_] == '/') {
        tag = EdgeTag::kAncestor;
        ++i_;
      }
      // Children arrive in preorder, so the parent is on the rightmost path.
      p->Extend(parent, tag, Label());
      Children(p, static_cast<int>(p->size()) - 1);
    }
  }

  std::string_view s_;
  size_t i_ = 0;
};

// Backtracking embedder over a MatchHost. Pattern nodes are assigned in
// preorder; candidates are scanned in increasing host preorder, so the first
// complete assignment is the leftmost one.
class Embedder {
 public:
  Embedder(const Subtree& p, const MatchHost& h) : p_(p), h_(h), map_(p.size(), -1) {
    prev_sibling_.assign(p.size(), -1);
    std::vector<int> last_child(p.size(), -1);
    for (size_t k = 1; k < p.size(); ++k) {
      int u = p.node(static_cast<int>(k)).parent;
      prev_sibling_[k] = last_child[static_cast<size_t>(u)];
      last_child[static_cast<size_t>(u)] = static_cast<int>(k);
    }
  }

  // Calls visit(map) for each embedding until it returns false.
  template <typename Visit>
  void Run(Visit&& visit) {
    if (p_.size() == 0 || p_.size() > h_.size()) return;
    stop_ = false;
    Assign(0, visit);
  }

  const std::vector<int>& map() const { return map_; }

 private:
  template <typename Visit>
  void Assign(size_t k, Visit& visit) {
    if (k == p_.size()) {
      if (!visit(map_)) stop_ = true;
      return;
    }
    const PatternNode& pn = p_.node(static_cast<int>(k));
    int lo = 0, hi = static_cast<int>(h_.size());
    int a = -1;
    if (k > 0) {
      a = map_[static_cast<size_t>(pn.parent)];
      lo = a + 1;
      hi = h_.end[static_cast<size_t>(a)];
      if (int s = prev_sibling_[k]; s >= 0) {
        lo = std::max(lo, h_.end[static_cast<size_t>(map_[static_cast<size_t>(s)])]);
      }
    }
    for (int w = lo; w < hi && !stop_; ++w) {
      const size_t ws = static_cast<size_t>(w);
      if (h_.label[ws] != pn.label) continue;
      if (k > 0 && pn.tag == EdgeTag::kDirect && (h_.parent[ws] != a || !h_.direct[ws])) continue;
      map_[k] = w;
      Assign(k + 1, visit);
    }
  }

  const Subtree& p_;
  const MatchHost& h_;
  std::vector<int> map_;
  std::vector<int> prev_sibling_;
  bool stop_ = false;
};

}  // namespace

Subtree::Subtree(std::string root_label) { nodes_.push_back({std::move(root_label), -1, EdgeTag::kDirect}); }

std::vector<int> Subtree::Children(int i) const {
  std::vector<int> out;
  for (size_t k = 0; k < nodes_.size(); ++k) {
    if (nodes_[k].parent == i) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<int> Subtree::RightmostPath() const {
  std::vector<int> path;
  if (nodes_.empty()) return path;
  for (int v = static_cast<int>(nodes_.size()) - 1; v != -1; v = nodes_[static_cast<size_t>(v)].parent) {
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool Subtree::HasLabel(std::string_view label) const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [&](const PatternNode& n) { return n.label == label; });
}

void Subtree::Extend(int parent, EdgeTag tag, std::string label) {
  nodes_.push_back({std::move(label), parent, tag});
}

std::string Subtree::Encode() const {
  if (nodes_.empty()) return "";
  std::vector<std::vector<int>> kids(nodes_.size());
  for (size_t k = 1; k < nodes_.size(); ++k) {
    kids[static_cast<size_t>(nodes_[k].parent)].push_back(static_cast<int>(k));
  }
  std::string out;
  EncodeNode(*this, kids, 0, &out);
  return out;
}

Subtree Subtree::Decode(std::string_view encoding) { return Decoder(encoding).Run(); }

bool Subtree::operator<(const Subtree& other) const {
  return std::lexicographical_compare(
      nodes_.begin(), nodes_.end(), other.nodes_.begin(), other.nodes_.end(),
      [](const PatternNode& a, const PatternNode& b) {
        return std::tie(a.label, a.parent, a.tag) < std::tie(b.label, b.parent, b.tag);
      });
}

MatchHost MatchHost::FromTree(const DepTree& tree) {
  MatchHost h;
  const size_t n = tree.size();
  h.label.resize(n);
  h.parent.resize(n);
  h.end.resize(n);
  h.direct.assign(n, 1);
  h.node_of.resize(n);
  for (size_t p = 0; p < n; ++p) {
    int v = tree.node_at(static_cast<int>(p));
    h.node_of[p] = v;
    h.label[p] = tree.node(v).label;
    int par = tree.parent(v);
    h.parent[p] = par < 0 ? -1 : tree.pre(par);
    h.end[p] = tree.end(v);
  }
  return h;
}

MatchHost MatchHost::FromPattern(const Subtree& pattern) {
  MatchHost h;
  const size_t n = pattern.size();
  h.label.resize(n);
  h.parent.resize(n);
  h.end.resize(n);
  h.direct.resize(n);
  h.node_of.resize(n);
  for (size_t k = 0; k < n; ++k) {
    const PatternNode& pn = pattern.node(static_cast<int>(k));
    h.label[k] = pn.label;
    h.parent[k] = pn.parent;
    h.direct[k] = k > 0 && pn.tag == EdgeTag::kDirect;
    h.node_of[k] = static_cast<int>(k);
    h.end[k] = static_cast<int>(k) + 1;
  }
  // preorder storage: a node's subtree ends where its last descendant does
  for (size_t k = n; k-- > 1;) {
    size_t par = static_cast<size_t>(h.parent[k]);
    h.end[par] = std::max(h.end[par], h.end[k]);
  }
  return h;
}

bool Matches(const Subtree& pattern, const MatchHost& host) {
  bool found = false;
  Embedder(pattern, host).Run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

bool Matches(const Subtree& pattern, const DepTree& tree) {
  return Matches(pattern, MatchHost::FromTree(tree));
}

std::optional<std::vector<int>> LeftmostEmbedding(const Subtree& pattern, const DepTree& tree) {
  MatchHost host = MatchHost::FromTree(tree);
  std::optional<std::vector<int>> out;
  Embedder(pattern, host).Run([&](const std::vector<int>& m) {
    std::vector<int> nodes;
    for (int p : m) nodes.push_back(host.node_of[static_cast<size_t>(p)]);
    out = std::move(nodes);
    return false;
  });
  return out;
}

std::vector<std::vector<int>> AllEmbeddings(const Subtree& pattern, const DepTree& tree) {
  MatchHost host = MatchHost::FromTree(tree);
  std::vector<std::vector<int>> out;
  Embedder(pattern, host).Run([&](const std::vector<int>& m) {
    std::vector<int> nodes;
    for (int p : m) nodes.push_back(host.node_of[static_cast<size_t>(p)]);
    out.push_back(std::move(nodes));
    return true;
  });
  return out;
}

bool PatternEmbeds(const Subtree& general, const Subtree& specific) {
  return Matches(general, MatchHost::FromPattern(specific));
}

std::set<Subtree> EnumerateEmbeddedSubtrees(const DepTree& tree, size_t max_size) {
  std::vector<MatchHost> hosts = {MatchHost::FromTree(tree)};
  std::vector<internal::GrownPattern> grown = internal::GrowPatterns(
      hosts, {0}, max_size, [](size_t docs) { return docs >= 1; }, 1);
  std::set<Subtree> out;
  for (auto& g : grown) out.insert(std::move(g.pattern));
  return out;
}

namespace internal {
namespace {

struct Occurrence {
  int host;
  std::vector<int> map;  // pattern node -> host preorder position
};

std::vector<int> DistinctDocs(const std::vector<Occurrence>& occs, const std::vector<int>& doc_of) {
  std::vector<int> docs;
  docs.reserve(occs.size());
  for (const Occurrence& o : occs) docs.push_back(doc_of[static_cast<size_t>(o.host)]);
  std::sort(docs.begin(), docs.end());
  docs.erase(std::unique(docs.begin(), docs.end()), docs.end());
  return docs;
}

class Grower {
 public:
  Grower(const std::vector<MatchHost>& hosts, const std::vector<int>& doc_of, size_t max_size,
         const std::function<bool(size_t)>& keep)
      : hosts_(hosts), doc_of_(doc_of), max_size_(max_size), keep_(keep) {}

  void Grow(const Subtree& p, const std::vector<Occurrence>& occs, std::vector<GrownPattern>* out) {
    if (p.size() >= max_size_) return;
    const std::vector<int> rmp = p.RightmostPath();
    using Key = std::tuple<int, EdgeTag, std::string>;
    std::map<Key, std::vector<Occurrence>> ext;
    for (const Occurrence& o : occs) {
      const MatchHost& h = hosts_[static_cast<size_t>(o.host)];
      for (size_t r = 0; r < rmp.size(); ++r) {
        int a = o.map[static_cast<size_t>(rmp[r])];
        int lo = a + 1;
        if (r + 1 < rmp.size()) {
          // the next rightmost-path node is r's current last child
          lo = h.end[static_cast<size_t>(o.map[static_cast<size_t>(rmp[r + 1])])];
        }
        for (int w = lo; w < h.end[static_cast<size_t>(a)]; ++w) {
          const size_t ws = static_cast<size_t>(w);
          Occurrence child{o.host, o.map};
          child.map.push_back(w);
          if (h.parent[ws] == a && h.direct[ws]) {
            ext[Key{rmp[r], EdgeTag::kDirect, h.label[ws]}].push_back(child);
          }
          ext[Key{rmp[r], EdgeTag::kAncestor, h.label[ws]}].push_back(std::move(child));
        }
      }
    }
    for (auto& [key, child_occs] : ext) {
      std::vector<int> docs = DistinctDocs(child_occs, doc_of_);
      if (!keep_(docs.size())) continue;
      Subtree child = p;
      child.Extend(std::get<0>(key), std::get<1>(key), std::get<2>(key));
      out->push_back({child, std::move(docs)});
      Grow(child, child_occs, out);
    }
  }

 private:
  const std::vector<MatchHost>& hosts_;
  const std::vector<int>& doc_of_;
  size_t max_size_;
  const std::function<bool(size_t)>& keep_;
};

}  // namespace

std::vector<GrownPattern> GrowPatterns(const std::vector<MatchHost>& hosts,
                                       const std::vector<int>& doc_of, size_t max_size,
                                       const std::function<bool(size_t)>& keep, int threads) {
  std::vector<GrownPattern> out;
  if (max_size == 0) return out;
  std::map<std::string, std::vector<Occurrence>> singles;
  for (size_t i = 0; i < hosts.size(); ++i) {
    for (size_t p = 0; p < hosts[i].size(); ++p) {
      singles[hosts[i].label[p]].push_back({static_cast<int>(i), {static_cast<int>(p)}});
    }
  }
  // Each frequent single-node pattern roots an independent equivalence class.
  std::vector<std::pair<Subtree, const std::vector<Occurrence>*>> classes;
  for (const auto& [label, occs] : singles) {
    std::vector<int> docs = DistinctDocs(occs, doc_of);
    if (!keep(docs.size())) continue;
    Subtree root(label);
    out.push_back({root, std::move(docs)});
    classes.emplace_back(std::move(root), &occs);
  }
  std::vector<std::vector<GrownPattern>> per_class(classes.size());
  Grower grower(hosts, doc_of, max_size, keep);
  auto work = [&](size_t c) { grower.Grow(classes[c].first, *classes[c].second, &per_class[c]); };
  if (threads <= 1 || classes.size() < 2) {
    for (size_t c = 0; c < classes.size(); ++c) work(c);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (size_t c = next++; c < classes.size(); c = next++) work(c);
      });
    }
    for (std::thread& th : pool) th.join();
  }
  for (auto& v : per_class) {
    for (auto& g : v) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const GrownPattern& a, const GrownPattern& b) { return a.pattern < b.pattern; });
  return out;
}

}  // namespace internal
}  // namespace paramspec

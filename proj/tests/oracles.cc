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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <variant>

namespace paramspec::oracle {
namespace {

bool ProperAncestor(const DepTree& t, int a, int v) {
  for (int p = t.parent(v); p >= 0; p = t.parent(p)) {
    if (p == a) return true;
  }
  return false;
}

int Depth(const DepTree& t, int v) {
  int d = 0;
  for (int p = t.parent(v); p >= 0; p = t.parent(p)) ++d;
  return d;
}

}  // namespace

bool Embeds(const Subtree& pattern, const DepTree& tree) {
  const size_t k = pattern.size();
  const int n = static_cast<int>(tree.size());
  std::vector<int> img(k, -1);
  // Previous sibling of each pattern node, -1 if first.
  std::vector<int> prev(k, -1);
  for (size_t i = 1; i < k; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (pattern.node(static_cast<int>(j)).parent == pattern.node(static_cast<int>(i)).parent) {
        prev[i] = static_cast<int>(j);
      }
    }
  }
  std::function<bool(size_t)> place = [&](size_t i) -> bool {
    if (i == k) return true;
    const PatternNode& pn = pattern.node(static_cast<int>(i));
    for (int t = 0; t < n; ++t) {
      if (tree.node(t).label != pn.label) continue;
      if (std::find(img.begin(), img.begin() + static_cast<long>(i), t) !=
          img.begin() + static_cast<long>(i)) {
        continue;
      }
      if (i > 0) {
        int p = img[static_cast<size_t>(pn.parent)];
        if (pn.tag == EdgeTag::kDirect ? tree.parent(t) != p : !ProperAncestor(tree, p, t)) {
          continue;
        }
        if (prev[i] >= 0) {
          int s = img[static_cast<size_t>(prev[i])];
          // The earlier sibling's whole image subtree comes first.
          if (tree.pre(t) < tree.end(s)) continue;
        }
      }
      img[i] = t;
      if (place(i + 1)) return true;
      img[i] = -1;
    }
    return false;
  };
  return k > 0 && place(0);
}

std::set<std::string> Enumerate(const DepTree& tree, size_t max_size) {
  std::set<std::string> out;
  const int n = static_cast<int>(tree.size());
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) nodes.push_back(v);
    }
    if (nodes.size() > max_size) continue;
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) { return tree.pre(a) < tree.pre(b); });
    // Nearest ancestor inside the subset.
    std::vector<int> up(nodes.size(), -1);
    int roots = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
      int best = -1;
      for (size_t j = 0; j < nodes.size(); ++j) {
        if (ProperAncestor(tree, nodes[j], nodes[i]) &&
            (best < 0 || Depth(tree, nodes[j]) > Depth(tree, nodes[static_cast<size_t>(best)]))) {
          best = static_cast<int>(j);
        }
      }
      up[i] = best;
      roots += best < 0;
    }
    if (roots != 1) continue;
    std::vector<size_t> flexible;  // edges of tree length 1
    for (size_t i = 1; i < nodes.size(); ++i) {
      if (tree.parent(nodes[i]) == nodes[static_cast<size_t>(up[i])]) flexible.push_back(i);
    }
    for (uint32_t tags = 0; tags < (1u << flexible.size()); ++tags) {
      Subtree p(tree.node(nodes[0]).label);
      for (size_t i = 1; i < nodes.size(); ++i) {
        auto f = std::find(flexible.begin(), flexible.end(), i);
        bool direct = f != flexible.end() && (tags & (1u << (f - flexible.begin())));
        p.Extend(up[i], direct ? EdgeTag::kDirect : EdgeTag::kAncestor, tree.node(nodes[i]).label);
      }
      out.insert(p.Encode());
    }
  }
  return out;
}

std::map<std::string, size_t> Mine(const Forest& forest, size_t min_support, size_t max_size) {
  std::map<std::string, size_t> count;
  for (const auto& [doc, trees] : forest) {
    std::set<std::string> seen;
    for (const DepTree& t : trees) {
      std::set<std::string> e = Enumerate(t, max_size);
      seen.insert(e.begin(), e.end());
    }
    for (const std::string& s : seen) ++count[s];
  }
  std::map<std::string, size_t> out;
  for (const auto& [s, c] : count) {
    if (c >= min_support) out[s] = c;
  }
  return out;
}

Probability CountCondProb(const AbstractConstraint& ac, const Subtree& pattern,
                          const Sample& sample) {
  Probability p;
  for (const AnnotatedDoc& doc : sample) {
    bool has = false;
    for (const DepTree& t : doc.param.Trees()) has = has || Embeds(pattern, t);
    if (!has) continue;
    ++p.total;
    if (doc.acs.count(ac)) ++p.hits;
  }
  return p;
}

namespace {

const ValueSpec* Lookup(const GeneratedInput& in, const std::string& name) {
  for (const ValueSpec& v : in.values) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

bool Representable(const Element& e, const std::string& dtype) {
  static const std::map<std::string, std::pair<double, double>> kInt = {
      {"int8", {-128, 127}},          {"int16", {-32768, 32767}},
      {"int32", {-2147483648.0, 2147483647.0}},
      {"int64", {-9.3e18, 9.3e18}},   {"uint8", {0, 255}},
      {"uint16", {0, 65535}},         {"uint32", {0, 4294967295.0}},
      {"uint64", {0, 1.9e19}}};
  static const std::map<std::string, double> kFloat = {
      {"float16", 65504.0},           {"bfloat16", 3.39e38},
      {"float32", 3.4028235e38},      {"float64", std::numeric_limits<double>::max()},
      {"complex64", 3.4028235e38},    {"complex128", std::numeric_limits<double>::max()}};
  if (dtype == "bool") return std::holds_alternative<bool>(e);
  if (dtype == "string") return std::holds_alternative<std::string>(e);
  if (auto it = kInt.find(dtype); it != kInt.end()) {
    if (!std::holds_alternative<int64_t>(e)) return false;
    double v = static_cast<double>(std::get<int64_t>(e));
    return v >= it->second.first && v <= it->second.second;
  }
  if (auto it = kFloat.find(dtype); it != kFloat.end()) {
    double v;
    if (const double* d = std::get_if<double>(&e)) {
      v = *d;
    } else if (const int64_t* i = std::get_if<int64_t>(&e)) {
      v = static_cast<double>(*i);
    } else {
      return false;
    }
    if (!std::isfinite(v) || std::fabs(v) > it->second) return false;
    if (dtype == "float64" || dtype == "complex128") return true;
    // Narrow formats: exact in float32 first, then the narrower significand.
    float f = static_cast<float>(v);
    if (static_cast<double>(f) != v) return false;
    uint32_t bits;
    std::memcpy(&bits, &f, sizeof bits);
    if (dtype == "bfloat16") return (bits & 0xffffu) == 0;
    if (dtype == "float16") {
      if (v == 0) return true;
      int exp;
      std::frexp(v, &exp);  // v = m * 2^exp, 0.5 <= |m| < 1
      // 10 stored bits: v is a multiple of 2^(exp - 11), or of 2^-24 when
      // subnormal.
      int low = std::max(exp - 11, -24);
      double scaled = std::ldexp(v, -low);
      return scaled == std::trunc(scaled);
    }
    return true;
  }
  return false;
}

bool Admits(const std::string& option, const std::string& dtype) {
  if (option == dtype) return true;
  auto starts = [&](const char* p) { return dtype.rfind(p, 0) == 0; };
  if (option == "int") return starts("int") || starts("uint");
  if (option == "uint") return starts("uint");
  if (option == "float") return starts("float") || dtype == "bfloat16";
  if (option == "complex") return starts("complex");
  if (option == "number") {
    return starts("int") || starts("uint") || starts("float") || dtype == "bfloat16";
  }
  return false;
}

bool Numeric(const Element& e, double* x) {
  if (const int64_t* i = std::get_if<int64_t>(&e)) return *x = static_cast<double>(*i), true;
  if (const double* d = std::get_if<double>(&e)) return *x = *d, true;
  if (const bool* b = std::get_if<bool>(&e)) return *x = *b ? 1.0 : 0.0, true;
  return false;
}

bool Satisfies(double x, const Bound& b) {
  switch (b.op) {
    case CmpOp::kLt: return x < b.value;
    case CmpOp::kLe: return x <= b.value;
    case CmpOp::kGt: return x > b.value;
    case CmpOp::kGe: return x >= b.value;
    case CmpOp::kEq: return x == b.value;
    case CmpOp::kNe: return x != b.value;
  }
  return false;
}

std::string Text(const Element& e) {
  if (const std::string* s = std::get_if<std::string>(&e)) return *s;
  if (const bool* b = std::get_if<bool>(&e)) return *b ? "true" : "false";
  if (const int64_t* i = std::get_if<int64_t>(&e)) return std::to_string(*i);
  double d = std::get<double>(e);
  if (d == std::floor(d) && std::fabs(d) < 1e15) return std::to_string(static_cast<long long>(d));
  return std::to_string(d);
}

bool ShapeMatches(const ShapeSpec& s, const ValueSpec& v, const GeneratedInput& in) {
  if (s.same_as) {
    const ValueSpec* o = Lookup(in, *s.same_as);
    return o != nullptr && !o->IsNone() && o->shape == v.shape;
  }
  if (s.dims.size() != v.shape.size()) return false;
  for (size_t i = 0; i < s.dims.size(); ++i) {
    const DimTerm& d = s.dims[i];
    if (d.kind == DimTerm::Kind::kLiteral && d.value != v.shape[i]) return false;
    if (d.kind == DimTerm::Kind::kParamValue) {
      const ValueSpec* o = Lookup(in, d.name);
      if (o == nullptr || o->Numel() != 1 || !o->shape.empty()) return false;
      const int64_t* x = std::get_if<int64_t>(&o->values.at(0));
      if (x == nullptr || *x != v.shape[i]) return false;
    }
    if (d.kind == DimTerm::Kind::kParamDim) {
      const ValueSpec* o = Lookup(in, d.name);
      if (o == nullptr || static_cast<size_t>(d.index) >= o->shape.size() ||
          o->shape[static_cast<size_t>(d.index)] != v.shape[i]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool Conforms(const std::string& param, const GeneratedInput& in, const ApiConstraints& api) {
  const ParamSig* sig = api.FindParam(param);
  auto cit = api.constraints.find(param);
  ConcreteConstraint c = cit == api.constraints.end() ? ConcreteConstraint() : cit->second;
  bool unconstrained = c.dtypes.empty() && c.structures.empty() && c.ndims.empty() &&
                       c.shapes.empty() && c.range.empty() && c.enums.empty();
  const ValueSpec* v = Lookup(in, param);
  if (v == nullptr) return sig != nullptr && sig->optional;
  if (v->structure == Structure::kNone) {
    return unconstrained || (sig != nullptr && sig->default_literal == "None");
  }
  if (unconstrained) return true;

  int64_t numel = 1;
  for (int64_t d : v->shape) {
    if (d < 0) return false;
    numel *= d;
  }
  if (v->structure == Structure::kScalar && !v->shape.empty()) return false;
  if ((v->structure == Structure::kList || v->structure == Structure::kTuple) &&
      v->shape.size() != 1) {
    return false;
  }
  if (!v->fill && static_cast<int64_t>(v->values.size()) != numel) return false;
  std::vector<Element> elems;
  for (int64_t i = 0; i < numel; ++i) elems.push_back(v->At(i));

  if (!c.dtypes.empty()) {
    bool ok = false;
    for (const std::string& d : c.dtypes) {
      if (d.rfind("&", 0) == 0) {
        const ValueSpec* o = Lookup(in, d.substr(1, d.find('.') - 1));
        ok = ok || (o != nullptr && !o->IsNone() && o->dtype == v->dtype);
      } else {
        ok = ok || Admits(d, v->dtype);
      }
    }
    for (const Element& e : elems) ok = ok && Representable(e, v->dtype);
    if (!ok) return false;
  }
  if (!c.structures.empty() && !c.structures.count(std::string(StructureName(v->structure)))) {
    return false;
  }
  if (!c.ndims.empty() && !c.ndims.count(static_cast<int64_t>(v->shape.size()))) return false;
  if (!c.shapes.empty() &&
      std::none_of(c.shapes.begin(), c.shapes.end(),
                   [&](const ShapeSpec& s) { return ShapeMatches(s, *v, in); })) {
    return false;
  }
  for (const Element& e : elems) {
    double x;
    for (const Bound& b : c.range) {
      if (!Numeric(e, &x) || !Satisfies(x, b)) return false;
    }
    if (!c.enums.empty() && !c.enums.count(Text(e))) return false;
  }
  return true;
}

std::set<std::string> NonConforming(const GeneratedInput& input, const ApiConstraints& api) {
  std::set<std::string> out;
  for (const ParamSig& p : api.params) {
    if (!Conforms(p.name, input, api)) out.insert(p.name);
  }
  return out;
}

DepTree RandomTree(uint64_t seed, size_t max_nodes, const std::string& id) {
  std::mt19937_64 rng(seed);
  static const char* kLabels[] = {"A", "B", "C", "D_TYPE"};
  size_t n = 1 + rng() % max_nodes;
  std::vector<DepNode> nodes(n);
  // Heads point to earlier or later positions at random; build a random
  // rooted tree over a random permutation of positions.
  std::vector<int> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  for (size_t i = 0; i < n; ++i) {
    DepNode& d = nodes[static_cast<size_t>(order[i])];
    d.label = kLabels[rng() % 4];
    d.form = d.label;
    d.lemma = d.label;
    d.deprel = "dep";
    d.head = i == 0 ? -1 : order[rng() % i];
  }
  return DepTree::Build(id, std::move(nodes));
}

Forest RandomForest(uint64_t seed, size_t docs, size_t max_nodes) {
  Forest f;
  std::mt19937_64 rng(seed);
  for (size_t d = 0; d < docs; ++d) {
    std::string id = "doc" + std::to_string(d);
    size_t trees = 1 + rng() % 2;
    for (size_t t = 0; t < trees; ++t) {
      f[id].push_back(RandomTree(rng(), max_nodes, id + "/" + std::to_string(t)));
    }
  }
  return f;
}

}  // namespace paramspec::oracle

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

#include "paramspec/constraints.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <deque>
#include <queue>

#include "paramspec/errors.h"
#include "paramspec/io.h"
#include "paramspec/normalize.h"

namespace paramspec {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Category, std::string_view>, 9> kCategoryNames = {{
    {Category::kDType, "DTYPE"},
    {Category::kStructure, "STRUCTURE"},
    {Category::kNdim, "NDIM"},
    {Category::kShape, "SHAPE"},
    {Category::kValueEnum, "VALUE_ENUM"},
    {Category::kValueRange, "VALUE_RANGE"},
    {Category::kDepDType, "DEP_DTYPE"},
    {Category::kDepShape, "DEP_SHAPE"},
    {Category::kUnsupported, "UNSUPPORTED"},
}};

std::string FormatNumber(double v) {
  if (std::floor(v) == v && std::fabs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

bool ParseDouble(std::string_view s, double* out) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseInt64(std::string_view s, int64_t* out) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Accepts a string, a number, or a list of those.
std::vector<json> AsList(const json& v) {
  if (v.is_array()) return std::vector<json>(v.begin(), v.end());
  return {v};
}

std::string ScalarText(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
  if (v.is_number()) return FormatNumber(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    // a literal shape written as a list
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += ScalarText(v[i], where);
    }
    return out + "]";
  }
  throw SchemaError(where, "expected a string or number");
}

}  // namespace

std::string_view CategoryName(Category c) {
  for (const auto& [k, n] : kCategoryNames) {
    if (k == c) return n;
  }
  return "UNSUPPORTED";
}

std::optional<Category> CategoryFromName(std::string_view name) {
  for (const auto& [k, n] : kCategoryNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view SlotSymbol(Category c) {
  switch (c) {
    case Category::kDType: return "D_TYPE";
    case Category::kStructure: return "D_STRUCTURE";
    case Category::kNdim: return "CONSTANT_NUM";
    case Category::kShape: return "SHAPE";
    case Category::kValueEnum: return "ENUM";
    case Category::kValueRange: return "REXPR";
    case Category::kDepDType:
    case Category::kDepShape: return "PARAM";
    case Category::kUnsupported: return "";
  }
  return "";
}

AbstractConstraint AbstractConstraint::Make(Category category, std::vector<std::string> slots) {
  const std::string where = "AC " + std::string(CategoryName(category));
  if (slots.empty()) throw SchemaError(where, "no slots");
  bool any_abstract = std::any_of(slots.begin(), slots.end(), [](const std::string& s) {
    return AbstractKindFromName(s).has_value();
  });
  if (category == Category::kDepDType || category == Category::kDepShape) {
    if (slots.size() != 1 || slots[0] != "PARAM") {
      throw SchemaError(where, "dependency constraints take exactly one PARAM slot");
    }
  } else if (category != Category::kUnsupported && any_abstract) {
    if (slots.size() != 1 || slots[0] != SlotSymbol(category)) {
      throw SchemaError(where, "expects the single abstract slot " +
                                   std::string(SlotSymbol(category)));
    }
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  return AbstractConstraint{category, std::move(slots)};
}

bool AbstractConstraint::IsAbstract() const {
  return std::any_of(slots.begin(), slots.end(),
                     [](const std::string& s) { return AbstractKindFromName(s).has_value(); });
}

std::string AbstractConstraint::ToString() const {
  std::string out(CategoryName(category));
  out += "{";
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) out += ",";
    out += slots[i];
  }
  return out + "}";
}

AnnotationSet ParseAnnotations(std::string_view text) {
  json root = ParseJson(text, "annotations");
  if (!root.is_array()) throw SchemaError("annotations", "expected a list");
  AnnotationSet out;
  for (size_t i = 0; i < root.size(); ++i) {
    const std::string where = "annotations[" + std::to_string(i) + "]";
    const json& rec = root[i];
    if (!rec.is_object() || !rec.contains("api") || !rec.contains("param") ||
        !rec["api"].is_string() || !rec["param"].is_string()) {
      throw SchemaError(where, "expected an object with string 'api' and 'param'");
    }
    AnnotationKey key{rec["api"].get<std::string>(), rec["param"].get<std::string>()};
    if (out.count(key)) {
      throw DuplicateError("duplicate annotation for " + key.first + "." + key.second);
    }
    std::set<AbstractConstraint>& acs = out[key];
    for (const auto& [field, value] : rec.items()) {
      if (field == "api" || field == "param") continue;
      static const std::map<std::string, Category> kFields = {
          {"dtype", Category::kDType},      {"structure", Category::kStructure},
          {"ndim", Category::kNdim},        {"shape", Category::kShape},
          {"range", Category::kValueRange}, {"enum", Category::kValueEnum},
          {"unsupported", Category::kUnsupported}};
      auto f = kFields.find(field);
      if (f == kFields.end()) throw SchemaError(where + "." + field, "unknown field");
      std::vector<std::string> concrete;
      for (const json& v : AsList(value)) {
        std::string s = ScalarText(v, where + "." + field);
        if (s == "&PARAM.dtype" && f->second == Category::kDType) {
          acs.insert(AbstractConstraint::Make(Category::kDepDType, {"PARAM"}));
        } else if (s == "&PARAM.shape" && f->second == Category::kShape) {
          acs.insert(AbstractConstraint::Make(Category::kDepShape, {"PARAM"}));
        } else if (f->second != Category::kUnsupported && s == SlotSymbol(f->second)) {
          acs.insert(AbstractConstraint::Make(f->second, {s}));
        } else if (AbstractKindFromName(s)) {
          throw SchemaError(where + "." + field, "symbol " + s + " does not belong here");
        } else {
          if (f->second == Category::kValueRange) s = Bound::Parse(s).ToString();
          if (f->second == Category::kStructure) s = CanonicalStructure(s);
          concrete.push_back(std::move(s));
        }
      }
      if (!concrete.empty()) acs.insert(AbstractConstraint::Make(f->second, std::move(concrete)));
    }
  }
  return out;
}

AnnotationSet LoadAnnotations(const std::filesystem::path& path) {
  return ParseAnnotations(ReadFile(path));
}

void CheckAnnotations(const AnnotationSet& annotations, const std::vector<ApiDoc>& corpus) {
  std::map<std::string, const ApiDoc*> by_name;
  for (const ApiDoc& d : corpus) by_name[d.api_name] = &d;
  for (const auto& [key, acs] : annotations) {
    auto it = by_name.find(key.first);
    if (it == by_name.end()) throw SchemaError("annotations", "unknown api " + key.first);
    if (!it->second->param_docs.count(key.second) && !it->second->FindParam(key.second)) {
      throw SchemaError("annotations", "unknown parameter " + key.first + "." + key.second);
    }
  }
}

DimTerm DimTerm::Literal(int64_t v) { return {Kind::kLiteral, v, "", 0}; }
DimTerm DimTerm::ParamValue(std::string param) { return {Kind::kParamValue, 0, std::move(param), 0}; }
DimTerm DimTerm::ParamDim(std::string param, int index) {
  return {Kind::kParamDim, 0, std::move(param), index};
}
DimTerm DimTerm::Free(std::string symbol) { return {Kind::kFree, 0, std::move(symbol), 0}; }

DimTerm DimTerm::Parse(std::string_view text) {
  text = Trim(text);
  int64_t v = 0;
  if (ParseInt64(text, &v)) return Literal(v);
  if (!text.empty() && text[0] == '&') {
    std::string_view rest = text.substr(1);
    size_t dot = rest.find(".shape[");
    if (dot != std::string_view::npos && rest.back() == ']') {
      std::string_view idx = rest.substr(dot + 7, rest.size() - dot - 8);
      int64_t i = 0;
      if (!ParseInt64(idx, &i) || i < 0) throw SchemaError("dim '" + std::string(text) + "'", "bad index");
      return ParamDim(std::string(rest.substr(0, dot)), static_cast<int>(i));
    }
    if (rest.empty()) throw SchemaError("dim '&'", "empty reference");
    return ParamValue(std::string(rest));
  }
  if (text.empty()) throw SchemaError("dim", "empty dimension");
  return Free(std::string(text));
}

std::string DimTerm::ToString() const {
  switch (kind) {
    case Kind::kLiteral: return std::to_string(value);
    case Kind::kParamValue: return "&" + name;
    case Kind::kParamDim: return "&" + name + ".shape[" + std::to_string(index) + "]";
    case Kind::kFree: return name;
  }
  return name;
}

ShapeSpec ShapeSpec::SameAs(std::string param) { return ShapeSpec{std::move(param), {}}; }
ShapeSpec ShapeSpec::Dims(std::vector<DimTerm> dims) { return ShapeSpec{std::nullopt, std::move(dims)}; }

ShapeSpec ShapeSpec::Parse(std::string_view text) {
  text = Trim(text);
  if (text.size() > 7 && text[0] == '&' && text.substr(text.size() - 6) == ".shape") {
    return SameAs(std::string(text.substr(1, text.size() - 7)));
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw SchemaError("shape '" + std::string(text) + "'", "expected [..] or &param.shape");
  }
  std::string_view inner = Trim(text.substr(1, text.size() - 2));
  std::vector<DimTerm> dims;
  if (!inner.empty()) {
    size_t start = 0;
    while (true) {
      size_t comma = inner.find(',', start);
      dims.push_back(DimTerm::Parse(inner.substr(
          start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Dims(std::move(dims));
}

std::string ShapeSpec::ToString() const {
  if (same_as) return "&" + *same_as + ".shape";
  std::string out = "[";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += dims[i].ToString();
  }
  return out + "]";
}

bool ShapeSpec::HasReference() const {
  if (same_as) return true;
  return std::any_of(dims.begin(), dims.end(), [](const DimTerm& d) {
    return d.kind == DimTerm::Kind::kParamValue || d.kind == DimTerm::Kind::kParamDim;
  });
}

std::optional<CmpOp> Bound::ParseOp(std::string_view op) {
  if (op == "<") return CmpOp::kLt;
  if (op == "<=") return CmpOp::kLe;
  if (op == ">") return CmpOp::kGt;
  if (op == ">=") return CmpOp::kGe;
  if (op == "==") return CmpOp::kEq;
  if (op == "!=") return CmpOp::kNe;
  return std::nullopt;
}

Bound Bound::Parse(std::string_view text) {
  text = Trim(text);
  size_t n = 0;
  while (n < text.size() && std::string_view("<>=!").find(text[n]) != std::string_view::npos) ++n;
  auto op = ParseOp(text.substr(0, n));
  double v = 0;
  if (!op || !ParseDouble(Trim(text.substr(n)), &v)) {
    throw SchemaError("range '" + std::string(text) + "'", "expected '<op> <number>'");
  }
  return Bound{*op, v};
}

std::string Bound::ToString() const {
  static const char* kOps[] = {"<", "<=", ">", ">=", "==", "!="};
  return std::string(kOps[static_cast<int>(op)]) + " " + FormatNumber(value);
}

bool Bound::Holds(double x) const {
  switch (op) {
    case CmpOp::kLt: return x < value;
    case CmpOp::kLe: return x <= value;
    case CmpOp::kGt: return x > value;
    case CmpOp::kGe: return x >= value;
    case CmpOp::kEq: return x == value;
    case CmpOp::kNe: return x != value;
  }
  return false;
}

bool ConcreteConstraint::Empty() const { return Unconstrained() && unsupported.empty(); }

bool ConcreteConstraint::Unconstrained() const {
  return dtypes.empty() && structures.empty() && ndims.empty() && shapes.empty() &&
         range.empty() && enums.empty();
}

void ConcreteConstraint::Merge(const ConcreteConstraint& o) {
  dtypes.insert(o.dtypes.begin(), o.dtypes.end());
  structures.insert(o.structures.begin(), o.structures.end());
  ndims.insert(o.ndims.begin(), o.ndims.end());
  shapes.insert(o.shapes.begin(), o.shapes.end());
  range.insert(o.range.begin(), o.range.end());
  enums.insert(o.enums.begin(), o.enums.end());
  unsupported.insert(o.unsupported.begin(), o.unsupported.end());
}

void ConcreteConstraint::Canonicalize() {
  for (const ShapeSpec& s : shapes) {
    if (!s.same_as) ndims.insert(static_cast<int64_t>(s.dims.size()));
  }
}

std::set<std::string> ConcreteConstraint::References() const {
  std::set<std::string> out = DTypeRefs();
  for (const ShapeSpec& s : shapes) {
    if (s.same_as) out.insert(*s.same_as);
    for (const DimTerm& d : s.dims) {
      if (d.kind == DimTerm::Kind::kParamValue || d.kind == DimTerm::Kind::kParamDim) {
        out.insert(d.name);
      }
    }
  }
  return out;
}

std::set<std::string> ConcreteConstraint::ConcreteDTypes() const {
  std::set<std::string> out;
  for (const std::string& d : dtypes) {
    if (d.empty() || d[0] != '&') out.insert(d);
  }
  return out;
}

std::set<std::string> ConcreteConstraint::DTypeRefs() const {
  std::set<std::string> out;
  for (const std::string& d : dtypes) {
    if (d.size() > 7 && d[0] == '&' && d.substr(d.size() - 6) == ".dtype") {
      out.insert(d.substr(1, d.size() - 7));
    }
  }
  return out;
}

std::optional<double> ConcreteConstraint::Low() const {
  std::optional<double> lo;
  for (const Bound& b : range) {
    if (b.op == CmpOp::kGt || b.op == CmpOp::kGe || b.op == CmpOp::kEq) {
      lo = lo ? std::max(*lo, b.value) : b.value;
    }
  }
  return lo;
}

std::optional<double> ConcreteConstraint::High() const {
  std::optional<double> hi;
  for (const Bound& b : range) {
    if (b.op == CmpOp::kLt || b.op == CmpOp::kLe || b.op == CmpOp::kEq) {
      hi = hi ? std::min(*hi, b.value) : b.value;
    }
  }
  return hi;
}

json ConcreteConstraint::ToJson() const {
  json j = json::object();
  if (!dtypes.empty()) j["dtype"] = dtypes;
  if (!structures.empty()) j["structure"] = structures;
  if (!ndims.empty()) j["ndim"] = ndims;
  if (!shapes.empty()) {
    json s = json::array();
    for (const ShapeSpec& sh : shapes) s.push_back(sh.ToString());
    j["shape"] = std::move(s);
  }
  if (!range.empty()) {
    json r = json::array();
    for (const Bound& b : range) r.push_back(b.ToString());
    j["range"] = std::move(r);
  }
  if (!enums.empty()) j["enum"] = enums;
  if (!unsupported.empty()) j["unsupported"] = unsupported;
  return j;
}

ConcreteConstraint ConcreteConstraint::FromJson(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  ConcreteConstraint c;
  for (const auto& [key, value] : j.items()) {
    const std::string w = where + "." + key;
    for (const json& v : AsList(value)) {
      if (key == "dtype") {
        c.dtypes.insert(ScalarText(v, w));
      } else if (key == "structure") {
        c.structures.insert(CanonicalStructure(ScalarText(v, w)));
      } else if (key == "ndim") {
        int64_t n = 0;
        if (!ParseInt64(ScalarText(v, w), &n) || n < 0) throw SchemaError(w, "ndim must be >= 0");
        c.ndims.insert(n);
      } else if (key == "shape") {
        c.shapes.insert(ShapeSpec::Parse(ScalarText(v, w)));
      } else if (key == "range") {
        c.range.insert(Bound::Parse(ScalarText(v, w)));
      } else if (key == "enum") {
        c.enums.insert(ScalarText(v, w));
      } else if (key == "unsupported") {
        c.unsupported.insert(ScalarText(v, w));
      } else {
        throw SchemaError(w, "unknown constraint key");
      }
    }
  }
  c.Canonicalize();
  return c;
}

TopoResult TopoOrder(const DependencyGraph& g) {
  TopoResult out;
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i], i);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges) {
    if (e.first != e.second && index.count(e.first) && index.count(e.second)) edges.insert(e);
  }
  std::vector<bool> placed(g.nodes.size(), false);
  while (out.order.size() < g.nodes.size()) {
    // smallest signature index among nodes with no unplaced predecessor
    std::vector<size_t> indeg(g.nodes.size(), 0);
    for (const auto& [u, v] : edges) {
      if (!placed[index[u]]) ++indeg[index[v]];
    }
    bool progressed = false;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      if (!placed[i] && indeg[i] == 0) {
        placed[i] = true;
        out.order.push_back(g.nodes[i]);
        progressed = true;
        break;
      }
    }
    if (progressed) continue;
    // Every remaining node has a predecessor, so a cycle exists. An edge
    // (u, v) lies on a cycle iff u is reachable from v.
    auto reaches = [&](const std::string& from, const std::string& to) {
      std::set<std::string> seen = {from};
      std::deque<std::string> q = {from};
      while (!q.empty()) {
        std::string x = q.front();
        q.pop_front();
        if (x == to) return true;
        for (const auto& [a, b] : edges) {
          if (a == x && !placed[index[b]] && seen.insert(b).second) q.push_back(b);
        }
      }
      return false;
    };
    std::optional<std::pair<std::string, std::string>> drop;
    for (const auto& e : edges) {
      if (placed[index[e.first]] || placed[index[e.second]]) continue;
      if (reaches(e.second, e.first) && (!drop || e > *drop)) drop = e;
    }
    edges.erase(*drop);
    out.dropped.push_back(*drop);
    out.warnings.push_back("dependency cycle broken by dropping " + drop->first + " -> " +
                           drop->second);
  }
  return out;
}

const ParamSig* ApiConstraints::FindParam(std::string_view name) const {
  for (const ParamSig& p : params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const ConcreteConstraint& ApiConstraints::For(const std::string& param) const {
  static const ConcreteConstraint kEmpty;
  auto it = constraints.find(param);
  return it == constraints.end() ? kEmpty : it->second;
}

void ApiConstraints::RebuildGraph() {
  graph.nodes.clear();
  graph.edges.clear();
  for (const ParamSig& p : params) graph.nodes.push_back(p.name);
  for (const auto& [name, c] : constraints) {
    for (const std::string& r : c.References()) {
      if (r != name) graph.edges.insert({r, name});
    }
  }
}

json ConstraintsToJson(const ConstraintSet& set) {
  json apis = json::object();
  for (const auto& [name, api] : set) {
    json a;
    json params = json::array();
    for (const ParamSig& p : api.params) {
      params.push_back({{"name", p.name},
                        {"optional", p.optional},
                        {"default", p.default_literal ? json(*p.default_literal) : json(nullptr)}});
    }
    a["params"] = std::move(params);
    json cons = json::object();
    for (const auto& [param, c] : api.constraints) cons[param] = c.ToJson();
    a["constraints"] = std::move(cons);
    json deps = json::array();
    for (const auto& [u, v] : api.graph.edges) deps.push_back({u, v});
    a["dependencies"] = std::move(deps);
    apis[name] = std::move(a);
  }
  return json{{"apis", std::move(apis)}};
}

ConstraintSet ConstraintsFromJson(const json& j) {
  if (!j.is_object() || !j.contains("apis") || !j["apis"].is_object()) {
    throw SchemaError("constraints", "expected {\"apis\": {...}}");
  }
  ConstraintSet out;
  for (const auto& [name, a] : j["apis"].items()) {
    const std::string where = "constraints.apis." + name;
    if (!a.is_object()) throw SchemaError(where, "expected an object");
    ApiConstraints api;
    api.api = name;
    if (auto p = a.find("params"); p != a.end()) {
      if (!p->is_array()) throw SchemaError(where + ".params", "expected a list");
      for (const json& pj : *p) {
        if (!pj.is_object() || !pj.contains("name") || !pj["name"].is_string()) {
          throw SchemaError(where + ".params", "expected {name, optional, default}");
        }
        ParamSig sig;
        sig.name = pj["name"].get<std::string>();
        sig.optional = pj.value("optional", false);
        if (pj.contains("default") && pj["default"].is_string()) {
          sig.default_literal = pj["default"].get<std::string>();
        }
        api.params.push_back(std::move(sig));
      }
    }
    if (auto c = a.find("constraints"); c != a.end()) {
      if (!c->is_object()) throw SchemaError(where + ".constraints", "expected an object");
      for (const auto& [param, cj] : c->items()) {
        api.constraints[param] = ConcreteConstraint::FromJson(cj, where + ".constraints." + param);
      }
    }
    api.RebuildGraph();
    out.emplace(name, std::move(api));
  }
  return out;
}

ConstraintSet LoadConstraints(const std::filesystem::path& path) {
  return ConstraintsFromJson(ParseJson(ReadFile(path), path.string()));
}

std::string SerializeConstraints(const ConstraintSet& set) {
  return CanonicalDump(ConstraintsToJson(set));
}

const std::vector<std::string>& ConcreteDTypeNames() {
  static const std::vector<std::string> kNames = {
      "bool",    "int8",     "int16",   "int32",   "int64",     "uint8",      "uint16", "uint32",
      "uint64",  "float16",  "bfloat16", "float32", "float64",  "complex64", "complex128", "string"};
  return kNames;
}

bool IsConcreteDType(std::string_view name) {
  const auto& n = ConcreteDTypeNames();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<std::string> ExpandDType(std::string_view name) {
  static const std::map<std::string, std::vector<std::string>, std::less<>> kFamilies = {
      {"int", {"int8", "int16", "int32", "int64", "uint8", "uint16", "uint32", "uint64"}},
      {"uint", {"uint8", "uint16", "uint32", "uint64"}},
      {"float", {"float16", "bfloat16", "float32", "float64"}},
      {"complex", {"complex64", "complex128"}},
      {"number",
       {"int8", "int16", "int32", "int64", "uint8", "uint16", "uint32", "uint64", "float16",
        "bfloat16", "float32", "float64"}},
  };
  if (auto it = kFamilies.find(name); it != kFamilies.end()) return it->second;
  return {std::string(name)};
}

std::string CanonicalStructure(std::string_view name) {
  std::string n(name);
  for (char& c : n) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "tensor" || n == "ndarray" || n == "array" || n == "tensors" || n == "arrays") {
    return "tensor";
  }
  if (n == "lists") return "list";
  if (n == "tuples") return "tuple";
  return n;
}

}  // namespace paramspec

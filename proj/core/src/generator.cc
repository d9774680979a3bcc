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

#include "paramspec/generator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "paramspec/errors.h"
#include "paramspec/io.h"
#include "paramspec/validate.h"

namespace paramspec {

using nlohmann::json;

namespace {

constexpr std::string_view kAlphabet = "abcxyzABC01_";
constexpr double kInt32Min = -2147483648.0;
constexpr double kInt32Max = 2147483647.0;

bool IntegralLike(const std::string& dtype) { return IsIntegralDType(dtype) || dtype == "bool"; }

struct Interval {
  double lo;
  double hi;
};

// Admissible numeric interval for `dtype` under the range bounds of `c`
// (ignored when `use_range` is false). != bounds are left to the caller.
Interval Bounds(const ConcreteConstraint* c, const std::string& dtype) {
  auto [lo, hi] = DTypeLimits(dtype);
  bool integral = IntegralLike(dtype);
  if (c == nullptr) return {lo, hi};
  constexpr double kInf = std::numeric_limits<double>::infinity();
  for (const Bound& b : c->range) {
    double v = b.value;
    switch (b.op) {
      case CmpOp::kGe:
        lo = std::max(lo, integral ? std::ceil(v) : v);
        break;
      case CmpOp::kGt:
        lo = std::max(lo, integral ? std::floor(v) + 1 : std::nextafter(v, kInf));
        break;
      case CmpOp::kLe:
        hi = std::min(hi, integral ? std::floor(v) : v);
        break;
      case CmpOp::kLt:
        hi = std::min(hi, integral ? std::ceil(v) - 1 : std::nextafter(v, -kInf));
        break;
      case CmpOp::kEq:
        lo = std::max(lo, v);
        hi = std::min(hi, v);
        break;
      case CmpOp::kNe:
        break;
    }
  }
  return {lo, hi};
}

int64_t ToInt(double d) {
  if (d >= 9223372036854774784.0) return std::numeric_limits<int64_t>::max() - 1023;
  if (d <= -9223372036854775808.0) return std::numeric_limits<int64_t>::min();
  return static_cast<int64_t>(d);
}

int64_t DrawInt(Rng* rng, Interval iv) {
  int64_t lo = ToInt(iv.lo), hi = ToInt(iv.hi);
  if (rng->Chance(0.1)) {
    std::vector<int64_t> specials;
    for (int64_t s : {lo, hi, int64_t{-1}, int64_t{0}, int64_t{1}, int64_t{-2147483648LL},
                      int64_t{2147483647LL}}) {
      if (s >= lo && s <= hi) specials.push_back(s);
    }
    return rng->Pick(specials);
  }
  double a = std::max(iv.lo, kInt32Min), b = std::min(iv.hi, kInt32Max);
  if (a > b) {
    if (iv.lo > kInt32Max) {
      a = iv.lo;
      b = std::min(iv.hi, iv.lo + 2147483648.0);
    } else {
      a = std::max(iv.lo, iv.hi - 2147483648.0);
      b = iv.hi;
    }
  }
  return rng->Uniform(ToInt(a), ToInt(b));
}

double DrawRealRaw(Rng* rng, Interval iv) {
  if (rng->Chance(0.1)) {
    std::vector<double> specials;
    for (double s : {iv.lo, iv.hi, -1.0, 0.0, 1.0}) {
      if (std::isfinite(s) && s >= iv.lo && s <= iv.hi) specials.push_back(s);
    }
    if (!specials.empty()) return rng->Pick(specials);
  }
  for (int i = 0; i < 8; ++i) {
    double mag = std::pow(10.0, -38.0 + 76.0 * rng->Real());
    double sign = iv.lo >= 0 ? 1 : iv.hi <= 0 ? -1 : (rng->Chance(0.5) ? 1 : -1);
    double x = sign * mag;
    if (x >= iv.lo && x <= iv.hi) return x;
  }
  double a = std::max(iv.lo, -1e6), b = std::min(iv.hi, 1e6);
  if (a > b) {
    a = iv.lo;
    b = iv.hi;
  }
  double x = a + (b - a) * rng->Real();
  return std::clamp(x, iv.lo, iv.hi);
}

// A draw that is exactly representable in `dtype` and lies in `iv`, when one
// exists; the interval is first shrunk to representable endpoints.
double DrawReal(Rng* rng, Interval iv, const std::string& dtype) {
  Interval q{RoundToDType(iv.lo, dtype, Rounding::kUp), RoundToDType(iv.hi, dtype, Rounding::kDown)};
  if (!(q.lo <= q.hi)) return RoundToDType(iv.lo, dtype);
  for (int i = 0; i < 8; ++i) {
    double x = RoundToDType(DrawRealRaw(rng, q), dtype);
    if (x >= q.lo && x <= q.hi) return x;
  }
  return q.lo;
}

std::string DrawString(Rng* rng) {
  std::string s;
  int64_t n = rng->Uniform(0, 8);
  for (int64_t i = 0; i < n; ++i) s += kAlphabet[rng->Index(kAlphabet.size())];
  return s;
}

bool ExcludedByNe(const ConcreteConstraint* c, double x) {
  if (c == nullptr) return false;
  return std::any_of(c->range.begin(), c->range.end(),
                     [x](const Bound& b) { return b.op == CmpOp::kNe && b.value == x; });
}

std::optional<Element> ElementFromText(const std::string& text, const std::string& dtype) {
  if (dtype == "string") return Element(text);
  try {
    if (dtype == "bool") {
      if (text == "true" || text == "True") return Element(true);
      if (text == "false" || text == "False") return Element(false);
      return std::nullopt;
    }
    size_t used = 0;
    if (IsIntegralDType(dtype)) {
      long long v = std::stoll(text, &used);
      if (used == text.size()) return Element(static_cast<int64_t>(v));
      return std::nullopt;
    }
    if (IsFloatingDType(dtype) || IsComplexDType(dtype)) {
      double v = std::stod(text, &used);
      if (used == text.size()) return Element(v);
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

// `c` null: ignore range and enum constraints.
Element DrawElement(Rng* rng, const ConcreteConstraint* c, const std::string& dtype) {
  if (c != nullptr && !c->enums.empty()) {
    std::vector<std::string> e(c->enums.begin(), c->enums.end());
    const std::string& text = rng->Pick(e);
    if (auto el = ElementFromText(text, dtype)) return *el;
    return Element(text);
  }
  if (dtype == "string") return Element(DrawString(rng));
  Interval iv = Bounds(c, dtype);
  for (int i = 0;; ++i) {
    Element e;
    double x;
    if (dtype == "bool") {
      bool b = iv.lo > 0 ? true : iv.hi < 1 ? false : rng->Chance(0.5);
      e = b;
      x = b;
    } else if (IsIntegralDType(dtype)) {
      int64_t v = iv.lo <= iv.hi ? DrawInt(rng, iv) : ToInt(iv.lo);
      e = v;
      x = static_cast<double>(v);
    } else {
      double v = iv.lo <= iv.hi ? DrawReal(rng, iv, dtype) : iv.lo;
      e = v;
      x = v;
    }
    if (!ExcludedByNe(c, x) || i == 8) return e;
  }
}

void FillValues(ValueSpec* v, Rng* rng, const ConcreteConstraint* c, int64_t fill_threshold) {
  v->values.clear();
  v->fill.reset();
  if (v->IsNone()) return;
  int64_t n = v->Numel();
  bool numeric = IsNumericDType(v->dtype) || IsComplexDType(v->dtype) || v->dtype == "bool";
  if (n > fill_threshold && numeric) {
    Fill f;
    f.seed = rng->Next();
    if (c != nullptr && !c->enums.empty()) {
      Element e = DrawElement(rng, c, v->dtype);
      double x = 0;
      if (const int64_t* i = std::get_if<int64_t>(&e)) x = static_cast<double>(*i);
      if (const double* d = std::get_if<double>(&e)) x = *d;
      if (const bool* b = std::get_if<bool>(&e)) x = *b;
      f.low = f.high = x;
    } else if (v->dtype == "bool") {
      Interval iv = Bounds(c, v->dtype);
      f.low = iv.lo;
      f.high = iv.hi;
    } else {
      Interval iv = Bounds(c, v->dtype);
      if (iv.lo > iv.hi) {
        f.low = f.high = iv.lo;
      } else if (IsIntegralDType(v->dtype)) {
        int64_t a = DrawInt(rng, iv), b = DrawInt(rng, iv);
        f.low = static_cast<double>(std::min(a, b));
        f.high = static_cast<double>(std::max(a, b));
      } else {
        double a = DrawReal(rng, iv, v->dtype), b = DrawReal(rng, iv, v->dtype);
        f.low = std::min(a, b);
        f.high = std::max(a, b);
      }
      // keep excluded points outside the fill interval
      if (c != nullptr) {
        for (const Bound& b : c->range) {
          if (b.op == CmpOp::kNe && b.value >= f.low && b.value <= f.high) {
            if (b.value < iv.hi) {
              f.low = f.high = IsIntegralDType(v->dtype)
                                   ? b.value + 1
                                   : RoundToDType(std::nextafter(b.value, iv.hi), v->dtype, Rounding::kUp);
            } else {
              f.low = f.high = IsIntegralDType(v->dtype)
                                   ? b.value - 1
                                   : RoundToDType(std::nextafter(b.value, iv.lo), v->dtype, Rounding::kDown);
            }
          }
        }
      }
    }
    v->fill = f;
    return;
  }
  v->values.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) v->values.push_back(DrawElement(rng, c, v->dtype));
}

std::string InferEnumDType(const std::set<std::string>& enums) {
  bool all_int = true, all_num = true, all_bool = true;
  for (const std::string& e : enums) {
    all_int = all_int && ElementFromText(e, "int64").has_value();
    all_num = all_num && ElementFromText(e, "float64").has_value();
    all_bool = all_bool && ElementFromText(e, "bool").has_value();
  }
  if (all_bool) return "bool";
  if (all_int) return "int64";
  if (all_num) return "float64";
  return "string";
}

struct AltShape {
  std::vector<int64_t> dims;
};

class Builder {
 public:
  Builder(const ApiConstraints& api, const GeneratorOptions& options, uint64_t seed)
      : api_(api), options_(options), rng_(seed) {}

  Rng* rng() { return &rng_; }

  int64_t DrawDim() { return rng_.Uniform(0, options_.max_dim_size); }

  std::vector<std::string> DTypeOptions(const ConcreteConstraint& c, const GeneratedInput& input,
                                        bool fallback) {
    std::set<std::string> out;
    for (const std::string& d : c.ConcreteDTypes()) {
      for (const std::string& e : ExpandDType(d)) out.insert(e);
    }
    for (const std::string& ref : c.DTypeRefs()) {
      const ValueSpec* v = input.Find(ref);
      if (v != nullptr && !v->IsNone()) out.insert(v->dtype);
    }
    if (!fallback) return {out.begin(), out.end()};
    if (out.empty()) {
      if (!c.enums.empty()) return {InferEnumDType(c.enums)};
      std::vector<std::string> d;
      for (const std::string& x : options_.default_dtypes) {
        if (c.range.empty() || IsNumericDType(x)) d.push_back(x);
      }
      if (d.empty()) d = c.range.empty() ? options_.default_dtypes : std::vector<std::string>{"int64"};
      return d;
    }
    std::vector<std::string> all(out.begin(), out.end()), kept;
    for (const std::string& d : all) {
      bool ok = c.range.empty() || IsNumericDType(d) || d == "bool";
      for (const std::string& e : c.enums) ok = ok && ElementFromText(e, d).has_value();
      if (ok) kept.push_back(d);
    }
    return kept.empty() ? all : kept;
  }

  Structure PickStructure(const ConcreteConstraint& c) {
    std::vector<Structure> opts;
    for (const std::string& s : c.structures) {
      if (auto st = StructureFromName(s); st && *st != Structure::kNone) opts.push_back(*st);
    }
    if (opts.empty()) {
      bool want_array = !c.shapes.empty() ||
                        std::any_of(c.ndims.begin(), c.ndims.end(), [](int64_t n) { return n > 0; });
      bool want_scalar = !c.enums.empty() || (!c.ndims.empty() && !want_array);
      if (want_array) {
        opts = {Structure::kTensor};
      } else if (want_scalar) {
        opts = {Structure::kScalar};
      } else {
        opts = {Structure::kScalar, Structure::kTensor};
      }
    }
    return rng_.Pick(opts);
  }

  // Concrete dims of one alternative, or nullopt when a reference is
  // unresolved. Named free symbols are bound in `bindings`.
  std::optional<std::vector<int64_t>> Resolve(const ShapeSpec& s, const GeneratedInput& input,
                                              std::map<std::string, int64_t>* bindings) {
    if (s.same_as) {
      const ValueSpec* v = input.Find(*s.same_as);
      if (v == nullptr || v->IsNone()) return std::nullopt;
      return v->shape;
    }
    std::vector<int64_t> dims;
    for (const DimTerm& d : s.dims) {
      switch (d.kind) {
        case DimTerm::Kind::kLiteral:
          dims.push_back(d.value);
          break;
        case DimTerm::Kind::kParamValue: {
          const ValueSpec* v = input.Find(d.name);
          if (v == nullptr || v->IsNone() || v->fill || v->values.size() != 1 || v->Ndim() != 0) {
            return std::nullopt;
          }
          const int64_t* i = std::get_if<int64_t>(&v->values[0]);
          if (i == nullptr || *i < 0) return std::nullopt;
          dims.push_back(*i);
          break;
        }
        case DimTerm::Kind::kParamDim: {
          const ValueSpec* v = input.Find(d.name);
          if (v == nullptr || v->IsNone() || static_cast<size_t>(d.index) >= v->shape.size()) {
            return std::nullopt;
          }
          dims.push_back(v->shape[static_cast<size_t>(d.index)]);
          break;
        }
        case DimTerm::Kind::kFree:
          if (d.name == "?" || d.name.empty()) {
            dims.push_back(DrawDim());
          } else {
            auto [it, fresh] = bindings->emplace(d.name, 0);
            if (fresh) it->second = DrawDim();
            dims.push_back(it->second);
          }
          break;
      }
    }
    return dims;
  }

  std::vector<int64_t> PickShape(const ConcreteConstraint& c, Structure st,
                                 const GeneratedInput& input,
                                 std::map<std::string, int64_t>* bindings) {
    if (st == Structure::kScalar || st == Structure::kNone) return {};
    bool one_d = st == Structure::kList || st == Structure::kTuple;
    std::vector<std::vector<int64_t>> alts;
    for (const ShapeSpec& s : c.shapes) {
      auto dims = Resolve(s, input, bindings);
      if (!dims) continue;
      if (one_d && dims->size() != 1) continue;
      if (!c.ndims.empty() && !c.ndims.count(static_cast<int64_t>(dims->size()))) continue;
      alts.push_back(std::move(*dims));
    }
    if (!alts.empty()) return rng_.Pick(alts);
    int64_t ndim;
    if (one_d) {
      ndim = 1;
    } else if (!c.ndims.empty()) {
      std::vector<int64_t> n;
      for (int64_t x : c.ndims) {
        if (x >= 0 && x <= 8) n.push_back(x);
      }
      ndim = n.empty() ? *c.ndims.begin() : rng_.Pick(n);
    } else {
      ndim = rng_.Uniform(options_.min_ndim, options_.max_ndim);
    }
    std::vector<int64_t> shape;
    for (int64_t i = 0; i < ndim; ++i) shape.push_back(DrawDim());
    return shape;
  }

  ValueSpec Candidate(const std::string& name, const ConcreteConstraint& c,
                      const GeneratedInput& input, std::map<std::string, int64_t>* bindings) {
    ValueSpec v;
    v.name = name;
    v.structure = PickStructure(c);
    v.dtype = rng_.Pick(DTypeOptions(c, input, true));
    v.shape = PickShape(c, v.structure, input, bindings);
    FillValues(&v, &rng_, &c, options_.fill_threshold);
    return v;
  }

  bool ConformsWith(const std::string& name, GeneratedInput* input, const ValueSpec& v) {
    input->values.push_back(v);
    bool ok = ValidateParam(name, *input, api_).Conforms();
    input->values.pop_back();
    return ok;
  }

  std::optional<ValueSpec> TryConform(const std::string& name, GeneratedInput* input, int attempts) {
    const ConcreteConstraint& c = api_.For(name);
    for (int a = 0; a < attempts; ++a) {
      std::map<std::string, int64_t> bindings = bindings_;
      ValueSpec v = Candidate(name, c, *input, &bindings);
      if (ConformsWith(name, input, v)) {
        bindings_ = std::move(bindings);
        return v;
      }
    }
    return std::nullopt;
  }

  ValueSpec Conform(const std::string& name, GeneratedInput* input) {
    if (auto v = TryConform(name, input, options_.max_attempts)) return *v;
    throw GenerationError(name, "no conforming value found in " +
                                    std::to_string(options_.max_attempts) + " attempts");
  }

  // Categories of `name` that can be violated without making a dependent
  // parameter unsatisfiable.
  std::vector<Category> Violable(const std::string& name) {
    const ConcreteConstraint& c = api_.For(name);
    std::set<Category> out;
    if (!c.dtypes.empty()) out.insert(Category::kDType);
    if (!c.structures.empty()) out.insert(Category::kStructure);
    if (!c.ndims.empty()) out.insert(Category::kNdim);
    if (!c.shapes.empty()) out.insert(Category::kShape);
    if (!c.range.empty()) out.insert(Category::kValueRange);
    if (!c.enums.empty()) out.insert(Category::kValueEnum);
    for (const auto& [other, oc] : api_.constraints) {
      if (other == name) continue;
      for (const ShapeSpec& s : oc.shapes) {
        for (const DimTerm& d : s.dims) {
          if (d.name != name) continue;
          if (d.kind == DimTerm::Kind::kParamValue) {
            for (Category k : {Category::kDType, Category::kStructure, Category::kNdim,
                               Category::kShape, Category::kValueRange}) {
              out.erase(k);
            }
          } else if (d.kind == DimTerm::Kind::kParamDim) {
            for (Category k : {Category::kStructure, Category::kNdim, Category::kShape}) out.erase(k);
          }
        }
      }
    }
    return {out.begin(), out.end()};
  }

  void EnsureElements(ValueSpec* v) {
    if (v->structure == Structure::kNone) return;
    for (int64_t& d : v->shape) d = std::max<int64_t>(d, 1);
  }

  void SetOneElement(ValueSpec* v, const Element& e) {
    if (v->fill) {
      double x = 0;
      if (const int64_t* i = std::get_if<int64_t>(&e)) x = static_cast<double>(*i);
      if (const double* d = std::get_if<double>(&e)) x = *d;
      v->fill->low = v->fill->high = x;
      return;
    }
    v->values[rng_.Index(v->values.size())] = e;
  }

  std::optional<ValueSpec> Violate(const std::string& name, Category cat, GeneratedInput* input) {
    const ConcreteConstraint& c = api_.For(name);
    std::map<std::string, int64_t> bindings = bindings_;
    std::optional<ValueSpec> base = TryConform(name, input, 8);
    ValueSpec v = base ? *base : Candidate(name, c, *input, &bindings);
    switch (cat) {
      case Category::kDType: {
        std::vector<std::string> admitted = DTypeOptions(c, *input, false);
        std::vector<std::string> others;
        for (const std::string& d : ConcreteDTypeNames()) {
          if (std::find(admitted.begin(), admitted.end(), d) == admitted.end()) others.push_back(d);
        }
        if (others.empty()) return std::nullopt;
        v.dtype = rng_.Pick(others);
        FillValues(&v, &rng_, nullptr, options_.fill_threshold);
        break;
      }
      case Category::kStructure: {
        std::vector<Structure> others;
        for (Structure s : {Structure::kScalar, Structure::kTensor, Structure::kList, Structure::kTuple}) {
          if (!c.structures.count(std::string(StructureName(s)))) others.push_back(s);
        }
        if (others.empty()) return std::nullopt;
        Structure s = rng_.Pick(others);
        if (s == Structure::kScalar) {
          v.shape.clear();
        } else if (s == Structure::kList || s == Structure::kTuple) {
          if (v.shape.size() != 1) v.shape = {rng_.Uniform(1, options_.max_dim_size)};
        } else if (v.structure == Structure::kScalar) {
          v.shape = {rng_.Uniform(1, options_.max_dim_size)};
        }
        v.structure = s;
        FillValues(&v, &rng_, &c, options_.fill_threshold);
        break;
      }
      case Category::kNdim: {
        std::vector<int64_t> others;
        for (int64_t n = 0; n <= options_.max_ndim + 1; ++n) {
          if (!c.ndims.count(n)) others.push_back(n);
        }
        if (others.empty()) return std::nullopt;
        int64_t n = rng_.Pick(others);
        v.shape.clear();
        for (int64_t i = 0; i < n; ++i) v.shape.push_back(rng_.Uniform(1, options_.max_dim_size));
        if (v.structure == Structure::kScalar && n > 0) v.structure = Structure::kTensor;
        if ((v.structure == Structure::kList || v.structure == Structure::kTuple) && n != 1) {
          v.structure = Structure::kTensor;
        }
        FillValues(&v, &rng_, &c, options_.fill_threshold);
        break;
      }
      case Category::kShape:
      case Category::kDepShape: {
        if (v.shape.empty()) {
          v.shape = {rng_.Uniform(1, options_.max_dim_size)};
          if (v.structure == Structure::kScalar) v.structure = Structure::kTensor;
        } else {
          size_t i = rng_.Index(v.shape.size());
          v.shape[i] += rng_.Uniform(1, 3);
        }
        FillValues(&v, &rng_, &c, options_.fill_threshold);
        break;
      }
      case Category::kValueRange: {
        if (!IsNumericDType(v.dtype)) return std::nullopt;
        Interval iv = Bounds(&c, v.dtype);
        auto [dmin, dmax] = DTypeLimits(v.dtype);
        bool integral = IsIntegralDType(v.dtype);
        std::vector<double> bad;
        if (iv.lo > dmin) bad.push_back(integral ? iv.lo - 1 : iv.lo - std::max(1.0, std::fabs(iv.lo)));
        if (iv.hi < dmax) bad.push_back(integral ? iv.hi + 1 : iv.hi + std::max(1.0, std::fabs(iv.hi)));
        if (!integral) {
          // out of range after rounding to the dtype, and still finite
          for (double& x : bad) x = RoundToDType(x, v.dtype);
          std::erase_if(bad, [&](double x) { return !std::isfinite(x) || (x >= iv.lo && x <= iv.hi); });
        }
        for (const Bound& b : c.range) {
          if (b.op == CmpOp::kNe) bad.push_back(b.value);
        }
        if (bad.empty()) return std::nullopt;
        double x = rng_.Pick(bad);
        EnsureElements(&v);
        FillValues(&v, &rng_, &c, options_.fill_threshold);
        SetOneElement(&v, integral ? Element(ToInt(x)) : Element(x));
        break;
      }
      case Category::kValueEnum: {
        EnsureElements(&v);
        FillValues(&v, &rng_, &c, options_.fill_threshold);
        Element e;
        if (v.dtype == "string") {
          e = std::string("__not_an_option__");
        } else if (IsNumericDType(v.dtype) || IsComplexDType(v.dtype)) {
          int64_t m = 0;
          for (const std::string& t : c.enums) {
            if (auto el = ElementFromText(t, "int64")) m = std::max(m, std::get<int64_t>(*el));
          }
          e = IsIntegralDType(v.dtype) ? Element(m + 1) : Element(static_cast<double>(m) + 0.5);
        } else {
          return std::nullopt;
        }
        SetOneElement(&v, e);
        break;
      }
      default:
        return std::nullopt;
    }
    if (ConformsWith(name, input, v)) return std::nullopt;
    return v;
  }

  ValueSpec BaselineValue(const std::string& name) {
    ValueSpec v;
    v.name = name;
    v.structure = rng_.Chance(0.5) ? Structure::kScalar : Structure::kTensor;
    v.dtype = rng_.Pick(ConcreteDTypeNames());
    if (v.structure == Structure::kTensor) {
      int64_t n = rng_.Uniform(options_.min_ndim, options_.max_ndim);
      for (int64_t i = 0; i < n; ++i) v.shape.push_back(DrawDim());
    }
    FillValues(&v, &rng_, nullptr, options_.fill_threshold);
    return v;
  }

  void ResetBindings() { bindings_.clear(); }

 private:
  const ApiConstraints& api_;
  const GeneratorOptions& options_;
  Rng rng_;
  std::map<std::string, int64_t> bindings_;
};

void SortBySignature(const ApiConstraints& api, GeneratedInput* input) {
  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < api.params.size(); ++i) pos[api.params[i].name] = i;
  std::stable_sort(input->values.begin(), input->values.end(),
                   [&](const ValueSpec& a, const ValueSpec& b) { return pos[a.name] < pos[b.name]; });
}

}  // namespace

void GeneratorOptions::Check() const {
  auto unit = [](double x, const char* what) {
    if (!(x >= 0 && x <= 1)) throw Error(std::string(what) + " must lie in [0, 1]");
  };
  unit(conform_ratio, "conform_ratio");
  unit(optional_ratio, "optional_ratio");
  unit(mutation_p, "mutation_p");
  if (min_ndim < 0 || max_ndim < min_ndim) throw Error("dims_range must satisfy 0 <= lower <= upper");
  if (max_dim_size < 0) throw Error("max_dim_size must be non-negative");
  if (default_dtypes.empty()) throw Error("default_dtypes is empty");
  for (const std::string& d : default_dtypes) {
    if (!IsConcreteDType(d)) throw Error("default_dtypes: unknown dtype '" + d + "'");
  }
  if (max_attempts < 1) throw Error("max_attempts must be positive");
}

json GeneratorOptions::ToJson() const {
  return {{"max_iter", max_iter},
          {"conform_ratio", conform_ratio},
          {"optional_ratio", optional_ratio},
          {"mutation_p", mutation_p},
          {"seed", seed},
          {"dims_range", {min_ndim, max_ndim}},
          {"max_dim_size", max_dim_size},
          {"default_dtypes", default_dtypes},
          {"max_attempts", max_attempts},
          {"fill_threshold", fill_threshold}};
}

GeneratorOptions GeneratorOptions::FromJson(const json& j) {
  GeneratorOptions o;
  if (!j.is_object()) throw SchemaError("generator", "expected an object");
  try {
    o.max_iter = j.value("max_iter", o.max_iter);
    o.conform_ratio = j.value("conform_ratio", o.conform_ratio);
    o.optional_ratio = j.value("optional_ratio", o.optional_ratio);
    o.mutation_p = j.value("mutation_p", o.mutation_p);
    o.seed = j.value("seed", o.seed);
    if (j.contains("dims_range")) {
      const json& r = j["dims_range"];
      if (!r.is_array() || r.size() != 2) throw SchemaError("generator.dims_range", "expected [lower, upper]");
      o.min_ndim = r[0].get<int>();
      o.max_ndim = r[1].get<int>();
    }
    o.max_dim_size = j.value("max_dim_size", o.max_dim_size);
    o.default_dtypes = j.value("default_dtypes", o.default_dtypes);
    o.max_attempts = j.value("max_attempts", o.max_attempts);
    o.fill_threshold = j.value("fill_threshold", o.fill_threshold);
  } catch (const json::exception& e) {
    throw SchemaError("generator", e.what());
  }
  o.Check();
  return o;
}

int64_t Rng::Uniform(int64_t lo, int64_t hi) {
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (span == std::numeric_limits<uint64_t>::max()) return static_cast<int64_t>(Next());
  uint64_t n = span + 1;
  uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + x % n);
}

double Rng::Real() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t ApiSeed(uint64_t seed, std::string_view api) { return seed ^ Fnv1a64(api); }

uint64_t InputSeed(uint64_t api_seed, uint64_t index) { return SplitMix64(api_seed + index); }

std::vector<Mode> ModeSchedule(size_t max_iter, double conform_ratio, uint64_t api_seed) {
  size_t ci = static_cast<size_t>(std::llround(conform_ratio * static_cast<double>(max_iter)));
  ci = std::min(ci, max_iter);
  std::vector<Mode> modes(max_iter, Mode::kViolating);
  std::fill(modes.begin(), modes.begin() + static_cast<long>(ci), Mode::kConforming);
  Rng rng(SplitMix64(api_seed ^ 0x5eedULL));
  rng.Shuffle(&modes);
  return modes;
}

Generator::Generator(ApiConstraints api, GeneratorOptions options)
    : api_(std::move(api)), options_(std::move(options)) {
  options_.Check();
  TopoResult topo = TopoOrder(api_.graph);
  order_ = std::move(topo.order);
  warnings_ = std::move(topo.warnings);
}

bool Generator::ApplyMutator(Mutator m, const ConcreteConstraint& c, ValueSpec* v, Rng* rng) {
  if (v->IsNone() && m != Mutator::kNoneValue) return false;
  bool numeric = IsNumericDType(v->dtype) || IsComplexDType(v->dtype) || v->dtype == "bool";
  switch (m) {
    case Mutator::kConstraintBoundary: {
      if (!IsNumericDType(v->dtype) || v->Numel() == 0) return false;
      bool integral = IsIntegralDType(v->dtype);
      std::vector<double> points;
      for (const Bound& b : c.range) {
        for (double d : {-1.0, 0.0, 1.0}) points.push_back(b.value + d);
      }
      if (integral) {
        double max_int = DTypeLimits(v->dtype).second;
        for (double d : {-max_int, 0.0, max_int}) points.push_back(d);
      }
      if (points.empty()) return false;
      double x = rng->Pick(points);
      if (!integral) x = RoundToDType(x, v->dtype);
      Element e = integral ? Element(ToInt(x)) : Element(x);
      if (v->fill) {
        v->fill->low = v->fill->high = integral ? static_cast<double>(ToInt(x)) : x;
      } else {
        v->values[rng->Index(v->values.size())] = e;
      }
      return true;
    }
    case Mutator::kNoneValue:
      if (v->IsNone()) return false;
      v->structure = Structure::kNone;
      v->dtype.clear();
      v->shape.clear();
      v->values.clear();
      v->fill.reset();
      return true;
    case Mutator::kZero:
      if (!numeric || v->Numel() == 0) return false;
      if (v->fill) {
        v->fill->low = v->fill->high = 0;
      } else {
        for (Element& e : v->values) {
          if (v->dtype == "bool") {
            e = false;
          } else if (IsIntegralDType(v->dtype)) {
            e = int64_t{0};
          } else {
            e = 0.0;
          }
        }
      }
      return true;
    case Mutator::kZeroDimension: {
      if (v->shape.empty()) return false;
      v->shape[rng->Index(v->shape.size())] = 0;
      v->values.clear();
      v->fill.reset();
      return true;
    }
    case Mutator::kEmptyList:
      if (v->structure == Structure::kScalar) return false;
      v->shape = {0};
      v->values.clear();
      v->fill.reset();
      return true;
    case Mutator::kEmptyString:
      if (v->dtype != "string" || v->values.empty()) return false;
      v->values[rng->Index(v->values.size())] = std::string();
      return true;
  }
  return false;
}

GeneratedInput Generator::Generate(Mode mode, uint64_t seed) const {
  Builder b(api_, options_, seed);
  Rng* rng = b.rng();
  GeneratedInput input;
  input.api = api_.api;
  input.mode = mode;
  input.seed = seed;

  std::set<std::string> referenced;
  for (const auto& [u, v] : api_.graph.edges) referenced.insert(u);
  std::set<std::string> included;
  for (const ParamSig& p : api_.params) {
    bool draw = rng->Chance(options_.optional_ratio);
    if (!p.optional || draw || (mode != Mode::kBaseline && referenced.count(p.name))) {
      included.insert(p.name);
    }
  }

  if (mode == Mode::kBaseline) {
    for (const ParamSig& p : api_.params) {
      if (!included.count(p.name)) continue;
      input.values.push_back(b.BaselineValue(p.name));
      input.trace.push_back(p.name);
    }
    return input;
  }

  if (mode == Mode::kConforming) {
    for (const std::string& name : order_) {
      if (!included.count(name)) continue;
      input.values.push_back(b.Conform(name, &input));
      input.trace.push_back(name);
    }
  } else {
    std::vector<std::string> eligible, preferred;
    for (const std::string& name : order_) {
      std::vector<Category> cats = b.Violable(name);
      if (cats.empty()) continue;
      eligible.push_back(name);
      if (!(cats.size() == 1 && cats[0] == Category::kValueEnum)) preferred.push_back(name);
    }
    if (eligible.empty()) {
      throw GenerationError(api_.api, "no parameter has a constraint that can be violated");
    }
    const std::string target = rng->Pick(preferred.empty() ? eligible : preferred);
    included.insert(target);
    std::vector<Category> cats = b.Violable(target);
    bool done = false;
    for (int attempt = 0; attempt < options_.max_attempts && !done; ++attempt) {
      input.values.clear();
      input.trace.clear();
      b.ResetBindings();
      Category cat = rng->Pick(cats);
      try {
        bool ok = true;
        for (const std::string& name : order_) {
          if (!included.count(name)) continue;
          if (name == target) {
            std::optional<ValueSpec> v = b.Violate(name, cat, &input);
            if (!v) {
              ok = false;
              break;
            }
            input.values.push_back(std::move(*v));
          } else {
            input.values.push_back(b.Conform(name, &input));
          }
          input.trace.push_back(name);
        }
        if (!ok) continue;
      } catch (const GenerationError&) {
        continue;
      }
      Verdicts verdicts = Validate(input, api_);
      if (NonConforming(verdicts) == std::set<std::string>{target}) {
        const ParamVerdict& pv = verdicts.at(target);
        input.violated_param = target;
        input.violated_categories = pv.violations;
        input.violated_categories.insert(pv.unresolved.begin(), pv.unresolved.end());
        done = true;
      }
    }
    if (!done) throw GenerationError(target, "no violating input found");
  }

  if (rng->Chance(options_.mutation_p)) {
    std::vector<std::string> names;
    for (const ValueSpec& v : input.values) {
      if (!input.violated_param || v.name != *input.violated_param) names.push_back(v.name);
    }
    rng->Shuffle(&names);
    std::vector<Mutator> order(std::begin(kAllMutators), std::end(kAllMutators));
    bool applied = false;
    for (const std::string& name : names) {
      rng->Shuffle(&order);
      for (Mutator m : order) {
        GeneratedInput copy = input;
        ValueSpec* v = nullptr;
        for (ValueSpec& x : copy.values) {
          if (x.name == name) v = &x;
        }
        if (!ApplyMutator(m, api_.For(name), v, rng)) continue;
        std::set<std::string> bad = NonConforming(Validate(copy, api_));
        std::set<std::string> want;
        if (input.violated_param) want.insert(*input.violated_param);
        if (bad != want) continue;
        copy.mutator = m;
        copy.mutated_param = name;
        input = std::move(copy);
        applied = true;
        break;
      }
      if (applied) break;
    }
  }
  SortBySignature(api_, &input);
  return input;
}

}  // namespace paramspec

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

#include "paramspec/validate.h"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace paramspec {
namespace {

bool ElementFits(const Element& e, const std::string& dtype) {
  auto [lo, hi] = DTypeLimits(dtype);
  if (dtype == "string") return std::holds_alternative<std::string>(e);
  if (dtype == "bool") return std::holds_alternative<bool>(e);
  if (IsIntegralDType(dtype)) {
    if (!std::holds_alternative<int64_t>(e)) return false;
    double v = static_cast<double>(std::get<int64_t>(e));
    return v >= lo && v <= hi;
  }
  if (IsFloatingDType(dtype) || IsComplexDType(dtype)) {
    double v;
    if (std::holds_alternative<double>(e)) {
      v = std::get<double>(e);
    } else if (std::holds_alternative<int64_t>(e)) {
      v = static_cast<double>(std::get<int64_t>(e));
    } else {
      return false;
    }
    return std::isfinite(v) && v >= lo && v <= hi && RepresentableIn(v, dtype);
  }
  return false;
}

// Value representable in its declared dtype and consistent with its shape.
bool WellTyped(const ValueSpec& v) {
  if (v.IsNone()) return true;
  if (!IsConcreteDType(v.dtype)) return false;
  if (v.fill) {
    if (!IsNumericDType(v.dtype) && v.dtype != "bool") return false;
    auto [lo, hi] = DTypeLimits(v.dtype);
    if (!(v.fill->low <= v.fill->high) || v.fill->low < lo || v.fill->high > hi) return false;
    if (!RepresentableIn(v.fill->low, v.dtype) || !RepresentableIn(v.fill->high, v.dtype)) {
      return false;
    }
    if (IsIntegralDType(v.dtype) || v.dtype == "bool") {
      return v.Numel() == 0 || std::ceil(v.fill->low) <= std::floor(v.fill->high);
    }
    return true;
  }
  return std::all_of(v.values.begin(), v.values.end(),
                     [&](const Element& e) { return ElementFits(e, v.dtype); });
}

bool ShapeConsistent(const ValueSpec& v) {
  if (v.IsNone()) return true;
  if (std::any_of(v.shape.begin(), v.shape.end(), [](int64_t d) { return d < 0; })) return false;
  if (v.structure == Structure::kScalar && !v.shape.empty()) return false;
  if ((v.structure == Structure::kList || v.structure == Structure::kTuple) && v.shape.size() != 1) {
    return false;
  }
  if (v.fill) return true;
  return static_cast<int64_t>(v.values.size()) == v.Numel();
}

bool StructureAllowed(const std::set<std::string>& allowed, Structure s) {
  return allowed.count(std::string(StructureName(s))) > 0;
}

// nullopt: unresolved reference
std::optional<bool> DTypeOk(const ConcreteConstraint& c, const ValueSpec& v,
                            const GeneratedInput& env) {
  bool unresolved = false;
  for (const std::string& d : c.ConcreteDTypes()) {
    std::vector<std::string> admitted = ExpandDType(d);
    if (std::find(admitted.begin(), admitted.end(), v.dtype) != admitted.end()) return true;
  }
  for (const std::string& ref : c.DTypeRefs()) {
    const ValueSpec* other = env.Find(ref);
    if (other == nullptr || other->IsNone()) {
      unresolved = true;
      continue;
    }
    if (other->dtype == v.dtype) return true;
  }
  if (unresolved) return std::nullopt;
  return false;
}

std::optional<int64_t> IntegerValue(const ValueSpec* v) {
  if (v == nullptr || v->IsNone() || v->fill || v->values.size() != 1 || v->Ndim() != 0) {
    return std::nullopt;
  }
  if (const int64_t* i = std::get_if<int64_t>(&v->values[0])) return *i;
  return std::nullopt;
}

// Matches one explicit alternative; nullopt when a reference is unresolved.
std::optional<bool> ShapeAltOk(const ShapeSpec& s, const ValueSpec& v, const GeneratedInput& env) {
  if (s.same_as) {
    const ValueSpec* other = env.Find(*s.same_as);
    if (other == nullptr || other->IsNone()) return std::nullopt;
    return other->shape == v.shape;
  }
  if (s.dims.size() != v.shape.size()) return false;
  bool unresolved = false;
  for (size_t i = 0; i < s.dims.size(); ++i) {
    const DimTerm& d = s.dims[i];
    switch (d.kind) {
      case DimTerm::Kind::kLiteral:
        if (d.value != v.shape[i]) return false;
        break;
      case DimTerm::Kind::kParamValue: {
        auto val = IntegerValue(env.Find(d.name));
        if (!val) {
          unresolved = true;
        } else if (*val != v.shape[i]) {
          return false;
        }
        break;
      }
      case DimTerm::Kind::kParamDim: {
        const ValueSpec* other = env.Find(d.name);
        if (other == nullptr || other->IsNone() ||
            static_cast<size_t>(d.index) >= other->shape.size()) {
          unresolved = true;
        } else if (other->shape[static_cast<size_t>(d.index)] != v.shape[i]) {
          return false;
        }
        break;
      }
      case DimTerm::Kind::kFree:
        break;
    }
  }
  if (unresolved) return std::nullopt;
  return true;
}

bool NumericOf(const Element& e, double* out) {
  if (const int64_t* i = std::get_if<int64_t>(&e)) {
    *out = static_cast<double>(*i);
    return true;
  }
  if (const double* d = std::get_if<double>(&e)) {
    *out = *d;
    return true;
  }
  if (const bool* b = std::get_if<bool>(&e)) {
    *out = *b ? 1 : 0;
    return true;
  }
  return false;
}

bool RangeOk(const ConcreteConstraint& c, const ValueSpec& v) {
  auto holds = [&](double x) {
    return std::all_of(c.range.begin(), c.range.end(), [x](const Bound& b) { return b.Holds(x); });
  };
  if (v.Numel() == 0) return true;
  if (v.fill) {
    double lo = v.fill->low, hi = v.fill->high;
    if (IsIntegralDType(v.dtype) || v.dtype == "bool") {
      lo = std::ceil(lo);
      hi = std::floor(hi);
    }
    // Any point in [lo, hi] may be drawn: both ends must hold, and an
    // excluded point (!=) must lie outside.
    for (const Bound& b : c.range) {
      if (b.op == CmpOp::kNe) {
        if (b.value >= lo && b.value <= hi) return false;
      } else if (b.op == CmpOp::kEq) {
        if (!(lo == b.value && hi == b.value)) return false;
      }
    }
    return holds(lo) && holds(hi);
  }
  for (const Element& e : v.values) {
    double x;
    if (!NumericOf(e, &x) || !holds(x)) return false;
  }
  return true;
}

bool EnumOk(const ConcreteConstraint& c, const ValueSpec& v) {
  if (v.fill) {
    if (v.Numel() == 0) return true;
    if (v.fill->low != v.fill->high) return false;
    Element e = IsIntegralDType(v.dtype) ? Element(static_cast<int64_t>(v.fill->low))
                                         : Element(v.fill->low);
    return c.enums.count(ElementText(e)) > 0;
  }
  return std::all_of(v.values.begin(), v.values.end(),
                     [&](const Element& e) { return c.enums.count(ElementText(e)) > 0; });
}

std::set<Category> ConstrainedCategories(const ConcreteConstraint& c) {
  std::set<Category> out;
  if (!c.ConcreteDTypes().empty()) out.insert(Category::kDType);
  if (!c.DTypeRefs().empty()) out.insert(Category::kDepDType);
  if (!c.structures.empty()) out.insert(Category::kStructure);
  if (!c.ndims.empty()) out.insert(Category::kNdim);
  for (const ShapeSpec& s : c.shapes) out.insert(s.HasReference() ? Category::kDepShape : Category::kShape);
  if (!c.range.empty()) out.insert(Category::kValueRange);
  if (!c.enums.empty()) out.insert(Category::kValueEnum);
  return out;
}

}  // namespace

std::string ElementText(const Element& e) {
  if (const std::string* s = std::get_if<std::string>(&e)) return *s;
  if (const bool* b = std::get_if<bool>(&e)) return *b ? "true" : "false";
  if (const int64_t* i = std::get_if<int64_t>(&e)) return std::to_string(*i);
  double d = std::get<double>(e);
  if (std::floor(d) == d && std::fabs(d) < 1e15) return std::to_string(static_cast<long long>(d));
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, end);
}

ParamVerdict ValidateParam(const std::string& name, const GeneratedInput& input,
                           const ApiConstraints& api) {
  ParamVerdict verdict;
  const ConcreteConstraint& c = api.For(name);
  const ParamSig* sig = api.FindParam(name);
  const ValueSpec* v = input.Find(name);
  if (v == nullptr) {
    if (sig != nullptr && sig->optional) return verdict;
    if (!c.Unconstrained()) verdict.violations = ConstrainedCategories(c);
    if (verdict.violations.empty()) verdict.violations.insert(Category::kStructure);
    return verdict;
  }
  if (v->IsNone()) {
    bool none_default = sig != nullptr && sig->default_literal == "None";
    if (!none_default && !c.Unconstrained()) verdict.violations = ConstrainedCategories(c);
    return verdict;
  }
  if (c.Unconstrained()) return verdict;
  if (!ShapeConsistent(*v)) {
    verdict.violations.insert(Category::kStructure);
    return verdict;
  }

  if (!c.dtypes.empty()) {
    std::optional<bool> ok = DTypeOk(c, *v, input);
    Category cat = c.ConcreteDTypes().empty() ? Category::kDepDType : Category::kDType;
    if (!ok) {
      verdict.unresolved.insert(Category::kDepDType);
    } else if (!*ok || !WellTyped(*v)) {
      verdict.violations.insert(cat);
    }
  }
  if (!c.structures.empty() && !StructureAllowed(c.structures, v->structure)) {
    verdict.violations.insert(Category::kStructure);
  }
  if (!c.ndims.empty() && !c.ndims.count(static_cast<int64_t>(v->Ndim()))) {
    verdict.violations.insert(Category::kNdim);
  }
  if (!c.shapes.empty()) {
    bool matched = false, unresolved = false, all_refs = true;
    for (const ShapeSpec& s : c.shapes) {
      all_refs = all_refs && s.HasReference();
      std::optional<bool> ok = ShapeAltOk(s, *v, input);
      if (!ok) {
        unresolved = true;
      } else if (*ok) {
        matched = true;
      }
    }
    Category cat = all_refs ? Category::kDepShape : Category::kShape;
    if (!matched) {
      if (unresolved) {
        verdict.unresolved.insert(cat);
      } else {
        verdict.violations.insert(cat);
      }
    }
  }
  if (!c.range.empty() && !RangeOk(c, *v)) verdict.violations.insert(Category::kValueRange);
  if (!c.enums.empty() && !EnumOk(c, *v)) verdict.violations.insert(Category::kValueEnum);
  return verdict;
}

Verdicts Validate(const GeneratedInput& input, const ApiConstraints& api) {
  Verdicts out;
  for (const ParamSig& p : api.params) out[p.name] = ValidateParam(p.name, input, api);
  return out;
}

bool AllConform(const Verdicts& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second.Conforms(); });
}

std::set<std::string> NonConforming(const Verdicts& v) {
  std::set<std::string> out;
  for (const auto& [name, verdict] : v) {
    if (!verdict.Conforms()) out.insert(name);
  }
  return out;
}

}  // namespace paramspec

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

#include "paramspec/value.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "paramspec/errors.h"

namespace paramspec {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Structure, std::string_view>, 5> kStructures = {{
    {Structure::kNone, "none"},
    {Structure::kScalar, "scalar"},
    {Structure::kTensor, "tensor"},
    {Structure::kList, "list"},
    {Structure::kTuple, "tuple"},
}};

constexpr std::array<std::pair<Mutator, std::string_view>, 6> kMutators = {{
    {Mutator::kConstraintBoundary, "CONSTRAINT_BOUNDARY"},
    {Mutator::kNoneValue, "NONE_VALUE"},
    {Mutator::kZero, "ZERO"},
    {Mutator::kZeroDimension, "ZERO_DIMENSION"},
    {Mutator::kEmptyList, "EMPTY_LIST"},
    {Mutator::kEmptyString, "EMPTY_STRING"},
}};

json ElementToJson(const Element& e) {
  return std::visit([](const auto& v) { return json(v); }, e);
}

Element ElementFromJson(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<int64_t>();
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw SchemaError("value", "element must be a bool, number or string");
}

}  // namespace

std::string_view StructureName(Structure s) {
  for (const auto& [k, n] : kStructures) {
    if (k == s) return n;
  }
  return "none";
}

std::optional<Structure> StructureFromName(std::string_view name) {
  for (const auto& [k, n] : kStructures) {
    if (n == name) return k;
  }
  return std::nullopt;
}

int64_t ValueSpec::Numel() const {
  if (structure == Structure::kNone) return 0;
  int64_t n = 1;
  for (int64_t d : shape) n *= d;
  return n;
}

Element ValueSpec::At(int64_t i) const {
  if (!fill) return values.at(static_cast<size_t>(i));
  uint64_t x = static_cast<uint64_t>(i) + fill->seed + 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  double u = static_cast<double>(x >> 11) * 0x1.0p-53;
  if (dtype == "bool") return fill->low == fill->high ? fill->low != 0 : u < 0.5;
  if (IsIntegralDType(dtype)) {
    double v = std::floor(fill->low + u * (fill->high - fill->low + 1));
    return static_cast<int64_t>(std::min(v, fill->high));
  }
  // Bounds are representable, so clamping after rounding stays exact.
  double v = RoundToDType(fill->low + u * (fill->high - fill->low), dtype);
  return std::clamp(v, fill->low, fill->high);
}

json ValueSpec::ToJson() const {
  json j;
  j["name"] = name;
  j["structure"] = StructureName(structure);
  j["dtype"] = dtype;
  j["shape"] = shape;
  if (fill) {
    j["fill"] = {{"low", fill->low}, {"high", fill->high}, {"seed", fill->seed}};
  } else {
    json vals = json::array();
    for (const Element& e : values) vals.push_back(ElementToJson(e));
    j["values"] = std::move(vals);
  }
  return j;
}

ValueSpec ValueSpec::FromJson(const json& j) {
  if (!j.is_object()) throw SchemaError("value", "expected an object");
  ValueSpec v;
  v.name = j.value("name", "");
  auto s = StructureFromName(j.value("structure", "none"));
  if (!s) throw SchemaError("value." + v.name, "unknown structure");
  v.structure = *s;
  v.dtype = j.value("dtype", "");
  if (j.contains("shape")) v.shape = j["shape"].get<std::vector<int64_t>>();
  if (j.contains("fill")) {
    const json& f = j["fill"];
    v.fill = Fill{f.at("low").get<double>(), f.at("high").get<double>(),
                  f.at("seed").get<uint64_t>()};
  } else if (j.contains("values")) {
    for (const json& e : j["values"]) v.values.push_back(ElementFromJson(e));
  }
  return v;
}

std::string_view ModeName(Mode m) {
  switch (m) {
    case Mode::kConforming: return "CI";
    case Mode::kViolating: return "VI";
    case Mode::kBaseline: return "BASELINE";
  }
  return "CI";
}

std::optional<Mode> ModeFromName(std::string_view name) {
  if (name == "CI") return Mode::kConforming;
  if (name == "VI") return Mode::kViolating;
  if (name == "BASELINE") return Mode::kBaseline;
  return std::nullopt;
}

std::string_view MutatorName(Mutator m) {
  for (const auto& [k, n] : kMutators) {
    if (k == m) return n;
  }
  return "";
}

std::optional<Mutator> MutatorFromName(std::string_view name) {
  for (const auto& [k, n] : kMutators) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const ValueSpec* GeneratedInput::Find(std::string_view name) const {
  for (const ValueSpec& v : values) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

json GeneratedInput::ToJson() const {
  json j = WireRecord();
  j["mode"] = ModeName(mode);
  j["seed"] = seed;
  j["violated_param"] = violated_param ? json(*violated_param) : json(nullptr);
  json cats = json::array();
  for (Category c : violated_categories) cats.push_back(CategoryName(c));
  j["violated_categories"] = std::move(cats);
  j["mutator"] = mutator ? json(MutatorName(*mutator)) : json(nullptr);
  j["mutated_param"] = mutated_param ? json(*mutated_param) : json(nullptr);
  j["trace"] = trace;
  return j;
}

GeneratedInput GeneratedInput::FromJson(const json& j) {
  GeneratedInput in;
  in.api = j.at("api").get<std::string>();
  for (const json& v : j.at("values")) in.values.push_back(ValueSpec::FromJson(v));
  if (auto m = ModeFromName(j.value("mode", "CI"))) in.mode = *m;
  in.seed = j.value("seed", uint64_t{0});
  if (j.contains("violated_param") && j["violated_param"].is_string()) {
    in.violated_param = j["violated_param"].get<std::string>();
  }
  if (j.contains("violated_categories")) {
    for (const json& c : j["violated_categories"]) {
      if (auto cat = CategoryFromName(c.get<std::string>())) in.violated_categories.insert(*cat);
    }
  }
  if (j.contains("mutator") && j["mutator"].is_string()) {
    in.mutator = MutatorFromName(j["mutator"].get<std::string>());
  }
  if (j.contains("mutated_param") && j["mutated_param"].is_string()) {
    in.mutated_param = j["mutated_param"].get<std::string>();
  }
  if (j.contains("trace")) in.trace = j["trace"].get<std::vector<std::string>>();
  return in;
}

json GeneratedInput::WireRecord() const {
  json vals = json::array();
  for (const ValueSpec& v : values) vals.push_back(v.ToJson());
  return json{{"api", api}, {"values", std::move(vals)}};
}

bool IsIntegralDType(std::string_view d) {
  return d == "int8" || d == "int16" || d == "int32" || d == "int64" || d == "uint8" ||
         d == "uint16" || d == "uint32" || d == "uint64";
}

bool IsFloatingDType(std::string_view d) {
  return d == "float16" || d == "bfloat16" || d == "float32" || d == "float64";
}

bool IsComplexDType(std::string_view d) { return d == "complex64" || d == "complex128"; }

bool IsNumericDType(std::string_view d) {
  return IsIntegralDType(d) || IsFloatingDType(d) || IsComplexDType(d);
}

std::pair<double, double> DTypeLimits(std::string_view d) {
  if (d == "int8") return {-128, 127};
  if (d == "int16") return {-32768, 32767};
  if (d == "int32") return {-2147483648.0, 2147483647.0};
  if (d == "int64") return {-9223372036854775808.0, 9223372036854774784.0};
  if (d == "uint8") return {0, 255};
  if (d == "uint16") return {0, 65535};
  if (d == "uint32") return {0, 4294967295.0};
  if (d == "uint64") return {0, 9223372036854774784.0};
  if (d == "float16") return {-65504.0, 65504.0};
  if (d == "bool") return {0, 1};
  if (d == "float64" || d == "complex128") {
    return {-std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  }
  if (d == "bfloat16") return {-3.3895313892515355e38, 3.3895313892515355e38};
  // float32, complex64
  return {-3.4028234663852886e38, 3.4028234663852886e38};
}

namespace {

struct FloatFormat {
  int precision;  // significand bits, implicit bit included
  int min_exp;    // exponent of the smallest normal
  double max;
};

std::optional<FloatFormat> FormatOf(std::string_view d) {
  if (d == "float16") return FloatFormat{11, -14, 65504.0};
  if (d == "bfloat16") return FloatFormat{8, -126, 3.3895313892515355e38};
  if (d == "float32" || d == "complex64") return FloatFormat{24, -126, 3.4028234663852886e38};
  return std::nullopt;
}

}  // namespace

double RoundToDType(double v, std::string_view dtype, Rounding mode) {
  std::optional<FloatFormat> f = FormatOf(dtype);
  if (!f || !std::isfinite(v) || v == 0) return v;
  int e = std::max(std::ilogb(v), f->min_exp);
  double quantum = std::ldexp(1.0, e - (f->precision - 1));
  double k = v / quantum;  // exact: scaling by a power of two
  switch (mode) {
    case Rounding::kNearest:
      k = std::nearbyint(k);
      break;
    case Rounding::kUp:
      k = std::ceil(k);
      break;
    case Rounding::kDown:
      k = std::floor(k);
      break;
  }
  double r = k * quantum;
  if (std::fabs(r) > f->max) return std::copysign(std::numeric_limits<double>::infinity(), r);
  return r;
}

bool RepresentableIn(double v, std::string_view dtype) {
  return std::isfinite(v) && RoundToDType(v, dtype) == v;
}

}  // namespace paramspec

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

// Generated argument values and their wire representation.

#ifndef PARAMSPEC_VALUE_H_
#define PARAMSPEC_VALUE_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/constraints.h"

namespace paramspec {

enum class Structure { kNone, kScalar, kTensor, kList, kTuple };

std::string_view StructureName(Structure s);  // "none", "scalar", ...
std::optional<Structure> StructureFromName(std::string_view name);

using Element = std::variant<bool, int64_t, double, std::string>;

// Elements of a large numeric value: deterministic pseudo-random numbers in
// [low, high] derived from `seed` (integers for integral dtypes).
struct Fill {
  double low = 0;
  double high = 0;
  uint64_t seed = 0;

  bool operator==(const Fill&) const = default;
};

struct ValueSpec {
  std::string name;
  Structure structure = Structure::kNone;
  std::string dtype;            // concrete dtype name; empty for None
  std::vector<int64_t> shape;   // [] for scalars, [n] for lists and tuples
  std::vector<Element> values;  // row-major, numel entries, unless `fill`
  std::optional<Fill> fill;

  int64_t Numel() const;
  // Element i in row-major order; fill elements are
  // low + u * (high - low) with u = splitmix64(seed + i) / 2^64 (integral
  // dtypes: floor over [low, high + 1), bool: u < 0.5).
  Element At(int64_t i) const;
  bool IsNone() const { return structure == Structure::kNone; }
  size_t Ndim() const { return shape.size(); }

  nlohmann::json ToJson() const;
  static ValueSpec FromJson(const nlohmann::json& j);

  bool operator==(const ValueSpec&) const = default;
};

enum class Mode { kConforming, kViolating, kBaseline };
std::string_view ModeName(Mode m);  // "CI", "VI", "BASELINE"
std::optional<Mode> ModeFromName(std::string_view name);

enum class Mutator {
  kConstraintBoundary,
  kNoneValue,
  kZero,
  kZeroDimension,
  kEmptyList,
  kEmptyString,
};
constexpr Mutator kAllMutators[] = {Mutator::kConstraintBoundary, Mutator::kNoneValue,
                                    Mutator::kZero,               Mutator::kZeroDimension,
                                    Mutator::kEmptyList,          Mutator::kEmptyString};
std::string_view MutatorName(Mutator m);
std::optional<Mutator> MutatorFromName(std::string_view name);

struct GeneratedInput {
  std::string api;
  std::vector<ValueSpec> values;  // signature order; omitted optionals absent
  Mode mode = Mode::kConforming;
  std::optional<std::string> violated_param;
  std::set<Category> violated_categories;
  std::optional<Mutator> mutator;
  std::optional<std::string> mutated_param;
  uint64_t seed = 0;
  // Parameter names in the order their values were fixed.
  std::vector<std::string> trace;

  const ValueSpec* Find(std::string_view name) const;

  // Full record (mode, seed, mutator, ...) for persistence.
  nlohmann::json ToJson() const;
  static GeneratedInput FromJson(const nlohmann::json& j);
  // Wire record sent to a harness worker: {"api", "values"}.
  nlohmann::json WireRecord() const;
};

// Integral range of a concrete integer dtype.
bool IsIntegralDType(std::string_view dtype);
bool IsFloatingDType(std::string_view dtype);
bool IsComplexDType(std::string_view dtype);
bool IsNumericDType(std::string_view dtype);
// [min, max] representable, as doubles (int64/uint64 limits are rounded).
std::pair<double, double> DTypeLimits(std::string_view dtype);

enum class Rounding { kNearest, kUp, kDown };
// Nearest value of a floating or complex dtype (ties to even), or the next
// one up or down. Overflow gives +-inf. Other dtypes return `v` unchanged.
double RoundToDType(double v, std::string_view dtype, Rounding mode = Rounding::kNearest);
// Finite and exactly representable in a floating or complex dtype.
bool RepresentableIn(double v, std::string_view dtype);

}  // namespace paramspec

#endif  // PARAMSPEC_VALUE_H_

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

// Seeded input generation: conforming and violating inputs under extracted
// constraints, boundary mutation, and an unguided baseline.

#ifndef PARAMSPEC_GENERATOR_H_
#define PARAMSPEC_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/constraints.h"
#include "paramspec/value.h"

namespace paramspec {

struct GeneratorOptions {
  size_t max_iter = 2000;
  double conform_ratio = 0.5;
  double optional_ratio = 0.2;
  double mutation_p = 0.4;
  uint64_t seed = 0;
  int min_ndim = 0;
  int max_ndim = 5;
  int max_dim_size = 8;
  // Used when a parameter has no dtype constraint and nothing else implies
  // one.
  std::vector<std::string> default_dtypes = {"float32", "int32", "int64",
                                             "float64", "bool",  "string"};
  int max_attempts = 64;
  // Numeric values with more elements than this carry a fill descriptor.
  int64_t fill_threshold = 64;

  // Throws Error on out-of-range ratios or an empty dtype list.
  void Check() const;
  nlohmann::json ToJson() const;
  // Keys absent from `j` keep their defaults.
  static GeneratorOptions FromJson(const nlohmann::json& j);
};

// mt19937_64 with our own range reduction, so sequences do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t Next() { return engine_(); }
  // Uniform in [lo, hi]; lo <= hi.
  int64_t Uniform(int64_t lo, int64_t hi);
  double Real();  // [0, 1)
  bool Chance(double p) { return Real() < p; }
  size_t Index(size_t n) { return static_cast<size_t>(Uniform(0, static_cast<int64_t>(n) - 1)); }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[Index(v.size())];
  }
  template <typename T>
  void Shuffle(std::vector<T>* v) {
    for (size_t i = v->size(); i > 1; --i) std::swap((*v)[i - 1], (*v)[Index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

uint64_t SplitMix64(uint64_t x);
// Per-API stream: seed mixed with a digest of the API name.
uint64_t ApiSeed(uint64_t seed, std::string_view api);
uint64_t InputSeed(uint64_t api_seed, uint64_t index);
// round(conform_ratio * max_iter) CIs, the rest VIs, in seeded order.
std::vector<Mode> ModeSchedule(size_t max_iter, double conform_ratio, uint64_t api_seed);

class Generator {
 public:
  Generator(ApiConstraints api, GeneratorOptions options);

  // Throws GenerationError when the constraints of a parameter cannot be met
  // (or, for VIs, when no parameter can be violated in isolation).
  GeneratedInput Generate(Mode mode, uint64_t seed) const;
  GeneratedInput Conforming(uint64_t seed) const { return Generate(Mode::kConforming, seed); }
  GeneratedInput Violating(uint64_t seed) const { return Generate(Mode::kViolating, seed); }
  GeneratedInput Baseline(uint64_t seed) const { return Generate(Mode::kBaseline, seed); }

  // Applies `m` to `value` in place; false when the mutator does not apply
  // to it. `c` supplies range endpoints for CONSTRAINT_BOUNDARY.
  static bool ApplyMutator(Mutator m, const ConcreteConstraint& c, ValueSpec* value, Rng* rng);

  const ApiConstraints& api() const { return api_; }
  const std::vector<std::string>& order() const { return order_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  ApiConstraints api_;
  GeneratorOptions options_;
  std::vector<std::string> order_;
  std::vector<std::string> warnings_;
};

}  // namespace paramspec

#endif  // PARAMSPEC_GENERATOR_H_

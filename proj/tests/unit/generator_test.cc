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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "paramspec/errors.h"
#include "paramspec/generator.h"
#include "paramspec/io.h"
#include "paramspec/mock_target.h"
#include "paramspec/validate.h"

namespace paramspec {
namespace {

// Both the documented constraints and those extracted from the docs.
std::vector<const ConstraintSet*> Sets() {
  return {&MockTruth(), &testing::MockExtracted()};
}

TEST(Generator, ConformingInputsConform) {
  for (const ConstraintSet* set : Sets()) {
    for (const auto& [name, api] : *set) {
      Generator g(api, GeneratorOptions{});
      for (uint64_t i = 0; i < 150; ++i) {
        GeneratedInput in = g.Conforming(InputSeed(ApiSeed(3, name), i));
        EXPECT_TRUE(oracle::NonConforming(in, api).empty())
            << name << " #" << i << "\n" << in.ToJson().dump();
        EXPECT_TRUE(AllConform(Validate(in, api))) << name << " #" << i;
      }
    }
  }
}

TEST(Generator, ViolatingInputsBreakExactlyOneParameter) {
  for (const ConstraintSet* set : Sets()) {
    for (const auto& [name, api] : *set) {
      Generator g(api, GeneratorOptions{});
      for (uint64_t i = 0; i < 150; ++i) {
        GeneratedInput in = g.Violating(InputSeed(ApiSeed(3, name), i));
        ASSERT_TRUE(in.violated_param.has_value());
        EXPECT_FALSE(in.violated_categories.empty());
        EXPECT_EQ(oracle::NonConforming(in, api), std::set<std::string>{*in.violated_param})
            << name << " #" << i << "\n" << in.ToJson().dump();
      }
    }
  }
}

TEST(Generator, DeterministicPerSeed) {
  const ApiConstraints& api = MockTruth().at("mock.math.segment_reduce");
  Generator a(api, GeneratorOptions{}), b(api, GeneratorOptions{});
  for (uint64_t s = 0; s < 50; ++s) {
    for (Mode m : {Mode::kConforming, Mode::kViolating, Mode::kBaseline}) {
      EXPECT_EQ(CanonicalDump(a.Generate(m, s).ToJson()), CanonicalDump(b.Generate(m, s).ToJson()));
    }
  }
  EXPECT_NE(CanonicalDump(a.Conforming(1).ToJson()), CanonicalDump(a.Conforming(2).ToJson()));
}

TEST(Generator, DependenciesAreHonoured) {
  const ApiConstraints& api = MockTruth().at("mock.sparse.unravel_index");
  Generator g(api, GeneratorOptions{});
  EXPECT_EQ(g.order(), (std::vector<std::string>{"indices", "dims", "name"}));
  for (uint64_t s = 0; s < 100; ++s) {
    GeneratedInput in = g.Conforming(s);
    ASSERT_NE(in.Find("indices"), nullptr);
    ASSERT_NE(in.Find("dims"), nullptr);
    EXPECT_EQ(in.Find("dims")->dtype, in.Find("indices")->dtype);
  }
}

TEST(ModeSchedule, SplitsExactly) {
  for (size_t n : {0, 1, 7, 2000}) {
    std::vector<Mode> m = ModeSchedule(n, 0.5, 99);
    ASSERT_EQ(m.size(), n);
    size_t ci = std::count(m.begin(), m.end(), Mode::kConforming);
    EXPECT_EQ(ci, static_cast<size_t>(std::llround(0.5 * static_cast<double>(n))));
  }
  EXPECT_EQ(ModeSchedule(100, 0.5, 1), ModeSchedule(100, 0.5, 1));
  EXPECT_NE(ModeSchedule(100, 0.5, 1), ModeSchedule(100, 0.5, 2));
  auto all = ModeSchedule(10, 1.0, 1);
  EXPECT_EQ(std::count(all.begin(), all.end(), Mode::kConforming), 10);
}

TEST(Mutators, ApplyWhereMeaningful) {
  ConcreteConstraint c;
  c.range = {Bound::Parse(">= 2")};
  Rng rng(1);
  ValueSpec v;
  v.structure = Structure::kList;
  v.dtype = "int32";
  v.shape = {3};
  v.values = {int64_t{4}, int64_t{5}, int64_t{6}};

  ValueSpec z = v;
  ASSERT_TRUE(Generator::ApplyMutator(Mutator::kZero, c, &z, &rng));
  for (int64_t i = 0; i < 3; ++i) EXPECT_EQ(std::get<int64_t>(z.At(i)), 0);

  ValueSpec n = v;
  ASSERT_TRUE(Generator::ApplyMutator(Mutator::kNoneValue, c, &n, &rng));
  EXPECT_TRUE(n.IsNone());
  EXPECT_FALSE(Generator::ApplyMutator(Mutator::kZero, c, &n, &rng));

  ValueSpec e = v;
  ASSERT_TRUE(Generator::ApplyMutator(Mutator::kEmptyList, c, &e, &rng));
  EXPECT_EQ(e.Numel(), 0);

  ValueSpec d = v;
  ASSERT_TRUE(Generator::ApplyMutator(Mutator::kZeroDimension, c, &d, &rng));
  EXPECT_EQ(d.shape, std::vector<int64_t>{0});

  EXPECT_FALSE(Generator::ApplyMutator(Mutator::kEmptyString, c, &v, &rng));

  ValueSpec b = v;
  ASSERT_TRUE(Generator::ApplyMutator(Mutator::kConstraintBoundary, c, &b, &rng));
  EXPECT_NE(b, v);

  ValueSpec s;
  s.structure = Structure::kScalar;
  s.dtype = "string";
  s.values = {std::string("x")};
  ASSERT_TRUE(Generator::ApplyMutator(Mutator::kEmptyString, c, &s, &rng));
  EXPECT_EQ(std::get<std::string>(s.At(0)), "");
  EXPECT_FALSE(Generator::ApplyMutator(Mutator::kEmptyList, c, &s, &rng));
}

TEST(Generator, MutatedInputsRecordTheMutation) {
  const ApiConstraints& api = MockTruth().at("mock.nn.max_pool3d");
  GeneratorOptions o;
  o.mutation_p = 1.0;
  Generator g(api, o);
  size_t mutated = 0;
  for (uint64_t s = 0; s < 200; ++s) {
    GeneratedInput in = g.Conforming(s);
    if (!in.mutator) continue;
    ++mutated;
    ASSERT_TRUE(in.mutated_param.has_value());
    EXPECT_TRUE(oracle::NonConforming(in, api).empty()) << in.ToJson().dump();
  }
  EXPECT_GT(mutated, 0u);
}

TEST(Generator, BaselineIgnoresConstraints) {
  const ApiConstraints& api = MockTruth().at("mock.nn.max_pool3d");
  Generator g(api, GeneratorOptions{});
  size_t conforming = 0;
  for (uint64_t s = 0; s < 300; ++s) {
    GeneratedInput in = g.Baseline(s);
    EXPECT_EQ(in.mode, Mode::kBaseline);
    EXPECT_FALSE(in.mutator.has_value());
    for (const ValueSpec& v : in.values) {
      EXPECT_TRUE(v.structure == Structure::kScalar || v.structure == Structure::kTensor ||
                  v.IsNone());
    }
    conforming += oracle::NonConforming(in, api).empty();
  }
  EXPECT_LT(conforming, 30u);
}

TEST(Generator, UnsatisfiableConstraintsThrow) {
  ApiConstraints api;
  api.api = "f";
  api.params = {{"x", false, std::nullopt}};
  api.constraints["x"].dtypes = {"int8"};
  api.constraints["x"].structures = {"scalar"};  // an empty tensor would conform vacuously
  api.constraints["x"].range = {Bound::Parse(">= 1000")};
  api.RebuildGraph();
  Generator g(api, GeneratorOptions{});
  try {
    g.Conforming(1);
    FAIL() << "no error";
  } catch (const GenerationError& e) {
    EXPECT_EQ(e.param(), "x");
  }

  ApiConstraints free;
  free.api = "g";
  free.params = {{"x", false, std::nullopt}};
  free.RebuildGraph();
  EXPECT_THROW(Generator(free, GeneratorOptions{}).Violating(1), GenerationError);
}

TEST(GeneratorOptions, CheckAndJson) {
  GeneratorOptions o;
  o.conform_ratio = 1.5;
  EXPECT_THROW(o.Check(), Error);
  GeneratorOptions p = GeneratorOptions::FromJson({{"max_iter", 10}});
  EXPECT_EQ(p.max_iter, 10u);
  EXPECT_EQ(p.mutation_p, GeneratorOptions{}.mutation_p);
  EXPECT_EQ(GeneratorOptions::FromJson(p.ToJson()).ToJson(), p.ToJson());
}

}  // namespace
}  // namespace paramspec

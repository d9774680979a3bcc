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

#include <cmath>

#include <gtest/gtest.h>

#include "paramspec/generator.h"
#include "paramspec/io.h"
#include "paramspec/validate.h"
#include "paramspec/value.h"

namespace paramspec {
namespace {

TEST(ValueSpec, JsonRoundTrip) {
  ValueSpec v;
  v.name = "x";
  v.structure = Structure::kTensor;
  v.dtype = "int32";
  v.shape = {2};
  v.values = {int64_t{1}, int64_t{-3}};
  EXPECT_EQ(ValueSpec::FromJson(v.ToJson()), v);
  EXPECT_EQ(v.Numel(), 2);
  EXPECT_EQ(std::get<int64_t>(v.At(1)), -3);
}

TEST(ValueSpec, FillElementsFollowTheFormula) {
  ValueSpec v;
  v.structure = Structure::kTensor;
  v.dtype = "float32";
  v.shape = {10, 10};
  v.fill = Fill{-2, 3, 77};
  for (int64_t i = 0; i < v.Numel(); ++i) {
    double u = static_cast<double>(SplitMix64(77 + static_cast<uint64_t>(i))) / 18446744073709551616.0;
    // Rounded to the nearest float32.
    EXPECT_EQ(std::get<double>(v.At(i)), static_cast<double>(static_cast<float>(-2 + u * 5))) << i;
  }
  v.dtype = "int32";
  for (int64_t i = 0; i < v.Numel(); ++i) {
    int64_t e = std::get<int64_t>(v.At(i));
    EXPECT_GE(e, -2);
    EXPECT_LE(e, 3);
  }
  EXPECT_EQ(ValueSpec::FromJson(v.ToJson()), v);
}

TEST(ValueSpec, DTypeClasses) {
  EXPECT_TRUE(IsIntegralDType("uint8"));
  EXPECT_TRUE(IsFloatingDType("bfloat16"));
  EXPECT_TRUE(IsComplexDType("complex64"));
  EXPECT_FALSE(IsNumericDType("string"));
  EXPECT_EQ(DTypeLimits("int8"), (std::pair<double, double>{-128, 127}));
}

TEST(ValueSpec, RoundingToNarrowFloats) {
  EXPECT_EQ(RoundToDType(0.1, "float64"), 0.1);
  EXPECT_EQ(RoundToDType(0.1, "float32"), static_cast<double>(0.1f));
  EXPECT_EQ(RoundToDType(1.0 + 1.0 / 512, "bfloat16"), 1.0);  // 7 stored bits
  EXPECT_EQ(RoundToDType(1.0 + 1.0 / 128, "bfloat16"), 1.0 + 1.0 / 128);
  EXPECT_EQ(RoundToDType(2049, "float16"), 2048);  // ties to even
  EXPECT_EQ(RoundToDType(5e-324, "float32"), 0);
  EXPECT_EQ(RoundToDType(5e-324, "float32", Rounding::kUp), std::ldexp(1.0, -149));
  EXPECT_EQ(RoundToDType(1e-9, "float16", Rounding::kUp), std::ldexp(1.0, -24));
  EXPECT_TRUE(std::isinf(RoundToDType(3.4028234663852886e38, "bfloat16")));
  EXPECT_EQ(DTypeLimits("bfloat16").second, 3.3895313892515355e38);
  EXPECT_TRUE(RepresentableIn(65504, "float16"));
  EXPECT_FALSE(RepresentableIn(65505, "float16"));
  EXPECT_FALSE(RepresentableIn(0.1, "float32"));
}

TEST(Names, RoundTrip) {
  for (Mutator m : kAllMutators) EXPECT_EQ(MutatorFromName(MutatorName(m)), m);
  for (Mode m : {Mode::kConforming, Mode::kViolating, Mode::kBaseline}) {
    EXPECT_EQ(ModeFromName(ModeName(m)), m);
  }
  EXPECT_EQ(ModeName(Mode::kConforming), "CI");
  EXPECT_EQ(StructureFromName("list"), Structure::kList);
}

TEST(GeneratedInput, JsonRoundTripAndWireRecord) {
  GeneratedInput in;
  in.api = "mock.identity";
  in.mode = Mode::kViolating;
  in.violated_param = "x";
  in.violated_categories = {Category::kStructure};
  in.mutator = Mutator::kZero;
  in.mutated_param = "x";
  in.seed = 5;
  ValueSpec x;
  x.name = "x";
  x.structure = Structure::kScalar;
  x.dtype = "string";
  x.values = {std::string("hi")};
  in.values = {x};
  in.trace = {"x"};
  GeneratedInput back = GeneratedInput::FromJson(in.ToJson());
  EXPECT_EQ(CanonicalDump(back.ToJson()), CanonicalDump(in.ToJson()));
  nlohmann::json w = in.WireRecord();
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(w["api"], "mock.identity");
  ASSERT_NE(in.Find("x"), nullptr);
  EXPECT_EQ(in.Find("y"), nullptr);
}

TEST(Io, CanonicalDumpIsSorted) {
  nlohmann::json j = {{"b", 1}, {"a", {{"d", 2}, {"c", 3}}}};
  EXPECT_EQ(CanonicalDump(j), "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(FileDigest("/no/such/file"), "");
}

}  // namespace
}  // namespace paramspec

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
#include "paramspec/errors.h"
#include "paramspec/normalize.h"

namespace paramspec {
namespace {

using testing::Keywords;

std::string Norm(std::string_view text, const std::set<std::string>& params = {}) {
  return Normalize(text, Keywords(), params).Render();
}

const NormToken* FindKind(const NormalizedSentence& s, TokenKind k) {
  for (const NormToken& t : s.tokens) {
    if (t.kind == k) return &t;
  }
  return nullptr;
}

TEST(Normalize, DescriptionForms) {
  EXPECT_EQ(Norm("A 4-D `Tensor` of type `float`."), "a CONSTANT_NUM d D_STRUCTURE of type D_TYPE");
  EXPECT_EQ(Norm("Must be one of the following types: `half`, `bfloat16`, `float32`."),
            "must be one of the following types : D_TYPE");
  EXPECT_EQ(Norm("A `Tensor` with the same type as `value`.", {"value", "filters"}),
            "a D_STRUCTURE with the same type as PARAM");
  EXPECT_EQ(Norm(R"(A `string` from: "SAME", "VALID".)"), "a D_TYPE from : ENUM");
  EXPECT_EQ(Norm("A `int32` > 0."), "a D_TYPE REXPR");
  EXPECT_EQ(Norm("Its shape is [filter_height, filter_width]."), "its shape is SHAPE");
  EXPECT_EQ(Norm("Defaults to `True`."), "defaults to CONSTANT_BOOL");
  EXPECT_EQ(Norm("Defaults to 0.5."), "defaults to CONSTANT_FLOAT");
}

TEST(Normalize, PayloadsKeepEveryCollapsedValue) {
  NormalizedSentence s =
      Normalize("A `Tensor` of type `half`, `bfloat16`, `float32`, `float64`.", Keywords(), {});
  const NormToken* dt = FindKind(s, TokenKind::kDType);
  ASSERT_NE(dt, nullptr);
  std::vector<std::string> got;
  for (const auto& p : dt->payload) got.insert(got.end(), p.begin(), p.end());
  EXPECT_EQ(got, (std::vector<std::string>{"float16", "bfloat16", "float32", "float64"}));

  NormalizedSentence e = Normalize(R"(One of "a_b", "c".)", Keywords(), {});
  const NormToken* en = FindKind(e, TokenKind::kEnum);
  ASSERT_NE(en, nullptr);
  EXPECT_EQ(en->payload.size(), 2u);

  NormalizedSentence r = Normalize("A `int32` >= 0.", Keywords(), {});
  const NormToken* rx = FindKind(r, TokenKind::kRexpr);
  ASSERT_NE(rx, nullptr);
  EXPECT_EQ(rx->payload, (std::vector<std::vector<std::string>>{{">=", "0"}}));
}

TEST(Normalize, NoAdjacentTokensOfOneAbstractKind) {
  for (const char* text : {"`int32`, `int64` or `float32`.", "Values \"a\", \"b\" and \"c\".",
                           "A `Tensor` `list` of type `float`."}) {
    NormalizedSentence s = Normalize(text, Keywords(), {});
    for (size_t i = 1; i < s.tokens.size(); ++i) {
      if (s.tokens[i].kind == TokenKind::kLiteral) continue;
      EXPECT_NE(s.tokens[i].kind, s.tokens[i - 1].kind) << text << " -> " << s.Render();
    }
  }
}

TEST(Normalize, Idempotent) {
  for (const char* text : {"A 4-D `Tensor` of type `float`.", "A `int32` > 0.",
                           "A `Tensor` with the same shape as `x`.",
                           R"(A `string` from: "SAME", "VALID".)"}) {
    std::string once = Norm(text, {"x"});
    EXPECT_EQ(Norm(once, {"x"}), once) << text;
  }
}

TEST(Normalize, KeywordKeysIgnoreSpacingAndCase) {
  EXPECT_EQ(KeywordTable::Key("Float-32"), KeywordTable::Key("float 32"));
  EXPECT_EQ(Keywords().DType("Float32"), "float32");
  EXPECT_EQ(Keywords().Structure("Tensor"), "tensor");
  EXPECT_EQ(Keywords().DType("banana"), std::nullopt);
}

TEST(Normalize, KeywordCollisionIsRejected) {
  KeywordTable t;
  t.AddDType("string", "string");
  EXPECT_THROW(t.AddStructure("string", "tensor"), SchemaError);
  EXPECT_THROW(KeywordTable::Parse(R"({"dtypes": [{"surface": ""}]})"), SchemaError);
}

TEST(Normalize, ParameterNamesBecomeParam) {
  EXPECT_EQ(Norm("Same as `filters`.", {"filters"}), "same as PARAM");
  EXPECT_EQ(Norm("Same as Filters.", {"filters"}), "same as PARAM");
  EXPECT_EQ(Norm("Same as banana.", {"filters"}), "same as banana");
}

TEST(Normalize, KindNames) {
  EXPECT_EQ(KindName(TokenKind::kDType), "D_TYPE");
  EXPECT_EQ(AbstractKindFromName("SHAPE"), TokenKind::kShape);
  EXPECT_EQ(AbstractKindFromName("LITERAL"), std::nullopt);
}

}  // namespace
}  // namespace paramspec

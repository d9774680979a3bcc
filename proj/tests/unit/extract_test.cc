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
#include "paramspec/extract.h"
#include "paramspec/rulegen.h"

namespace paramspec {
namespace {

using testing::DefaultRules;
using testing::MiniSample;
using testing::MiniTruth;

const ConstraintMap& Extracted() {
  static const ConstraintMap kMap = ExtractSample(MiniSample(), DefaultRules(), {});
  return kMap;
}

ConcreteConstraint Of(const std::string& api, const std::string& param) {
  return Extracted().at({api, param});
}

TEST(Extract, DTypeStructureNdim) {
  ConcreteConstraint c = Of("tf.nn.atrous_conv2d", "value");
  EXPECT_EQ(c.dtypes, std::set<std::string>{"float"});
  EXPECT_EQ(c.structures, std::set<std::string>{"tensor"});
  EXPECT_EQ(c.ndims, std::set<int64_t>{4});
  EXPECT_TRUE(c.shapes.empty());
}

TEST(Extract, DependenciesAndShapes) {
  ConcreteConstraint filters = Of("tf.nn.atrous_conv2d", "filters");
  EXPECT_EQ(filters.dtypes, std::set<std::string>{"&value.dtype"});
  ASSERT_EQ(filters.shapes.size(), 1u);
  EXPECT_EQ(filters.shapes.begin()->ToString(),
            "[filter_height,filter_width,in_channels,out_channels]");
  EXPECT_EQ(filters.ndims, std::set<int64_t>{4});
  EXPECT_EQ(filters.References(), std::set<std::string>{"value"});

  ConcreteConstraint y = Of("tf.where", "y");
  ASSERT_EQ(y.shapes.size(), 1u);
  EXPECT_EQ(y.shapes.begin()->same_as, "x");
}

TEST(Extract, EnumAndRange) {
  ConcreteConstraint padding = Of("tf.nn.atrous_conv2d", "padding");
  EXPECT_EQ(padding.enums, (std::set<std::string>{"SAME", "VALID"}));
  EXPECT_EQ(padding.dtypes, std::set<std::string>{"string"});
  ConcreteConstraint rate = Of("tf.nn.atrous_conv2d", "rate");
  EXPECT_EQ(rate.range, std::set<Bound>{Bound::Parse("> 0")});
}

TEST(Extract, NumberOfHeuristic) {
  ConcreteConstraint on = Of("tf.math.segment_sum", "num_segments");
  EXPECT_EQ(on.dtypes, std::set<std::string>{"int"});
  EXPECT_EQ(on.ndims, std::set<int64_t>{0});
  EXPECT_EQ(on.range, std::set<Bound>{Bound::Parse(">= 0")});
  ExtractOptions off;
  off.number_of_heuristic = false;
  for (const AnnotatedDoc& d : MiniSample()) {
    if (d.key != AnnotationKey{"tf.math.segment_sum", "num_segments"}) continue;
    ConcreteConstraint c = ExtractParam(d.param, DefaultRules(), d.known_names, off, nullptr);
    EXPECT_TRUE(c.dtypes.empty());
    EXPECT_TRUE(c.range.empty());
  }
}

TEST(Extract, WholeSampleQuality) {
  QualityReport q = Score(Extracted(), MiniTruth());
  EXPECT_EQ(q.evaluated, 39u);  // atrous_conv2d.name carries no constraint
  EXPECT_GE(q.overall.F1(), 0.9) << q.ToJson().dump();
}

TEST(Extract, NoRulesNoConstraints) {
  for (const AnnotatedDoc& d : MiniSample()) {
    ConcreteConstraint c = ExtractParam(d.param, {}, d.known_names, {false, 1}, nullptr);
    EXPECT_TRUE(c.Empty()) << d.id;
  }
}

TEST(Extract, JobsDoNotChangeResult) {
  auto prepared = testing::LoadPrepared("sample");
  ExtractOptions one, four;
  four.jobs = 4;
  ExtractionResult a = Extract(prepared, DefaultRules(), one);
  ExtractionResult b = Extract(prepared, DefaultRules(), four);
  EXPECT_EQ(SerializeConstraints(a.constraints), SerializeConstraints(b.constraints));
  EXPECT_EQ(a.SerializeDocBugs(), b.SerializeDocBugs());
}

TEST(DocBugs, UndescribedAndUnresolved) {
  ExtractionResult r = Extract(testing::LoadPrepared("sample"), DefaultRules(), {});
  bool where_x = false;
  for (const DocBug& b : r.doc_bugs) {
    where_x = where_x || (b.api == "tf.where" && b.kind == DocBugKind::kFormatting &&
                          b.names == std::vector<std::string>{"x"});
  }
  EXPECT_TRUE(where_x) << r.SerializeDocBugs();

  ExtractionResult m = Extract(testing::LoadPrepared("fixtures/moving_average"), DefaultRules(), {});
  std::vector<DocBug> unresolved;
  for (const DocBug& b : m.doc_bugs) {
    if (b.kind == DocBugKind::kUnresolvedDependency) unresolved.push_back(b);
  }
  ASSERT_EQ(unresolved.size(), 1u) << m.SerializeDocBugs();
  EXPECT_EQ(unresolved[0].names, std::vector<std::string>{"variable"});
  EXPECT_EQ(DocBugKindName(DocBugKind::kUnresolvedDependency), "UNRESOLVED_DEPENDENCY");
}

TEST(DocBugs, SignatureMismatch) {
  std::vector<ApiDoc> corpus = ParseCorpus(R"([{"api": "f",
    "params": [{"name": "x", "optional": false, "default": null}],
    "descriptions": {"x": "A value.", "ghost": "Not a parameter."}}])");
  ExtractionResult r = Extract(Prepare(corpus, testing::Keywords(), {}), DefaultRules(), {});
  bool ghost = false;
  for (const DocBug& b : r.doc_bugs) {
    ghost = ghost || (b.kind == DocBugKind::kSignatureMismatch &&
                      b.names == std::vector<std::string>{"ghost"});
  }
  EXPECT_TRUE(ghost) << r.SerializeDocBugs();
}

}  // namespace
}  // namespace paramspec

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

// Abstract constraints (annotation vocabulary), concrete per-parameter
// constraints, and the per-API dependency graph.

#ifndef PARAMSPEC_CONSTRAINTS_H_
#define PARAMSPEC_CONSTRAINTS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/corpus.h"

namespace paramspec {

enum class Category {
  kDType,
  kStructure,
  kNdim,
  kShape,
  kValueEnum,
  kValueRange,
  kDepDType,
  kDepShape,
  kUnsupported,
};

std::string_view CategoryName(Category c);
std::optional<Category> CategoryFromName(std::string_view name);
// Abstract token kind a category consumes ("D_TYPE" for kDType, "PARAM" for
// the dependency categories, "" for kUnsupported).
std::string_view SlotSymbol(Category c);

// An assertion such as p_T in {D_TYPE}. Slots hold either the single abstract
// symbol of the category or sorted concrete literals (e.g. NDIM {"0"} or
// VALUE_RANGE {">= 0"}), which need no instantiation.
struct AbstractConstraint {
  Category category = Category::kDType;
  std::vector<std::string> slots;

  // Validates slot arity; throws SchemaError.
  static AbstractConstraint Make(Category category, std::vector<std::string> slots);

  bool IsAbstract() const;
  std::string ToString() const;  // "DTYPE{D_TYPE}", "VALUE_RANGE{>= 0}"

  bool operator==(const AbstractConstraint&) const = default;
  bool operator<(const AbstractConstraint& o) const {
    return std::tie(category, slots) < std::tie(o.category, o.slots);
  }
};

// (api, param) -> ACs
using AnnotationKey = std::pair<std::string, std::string>;
using AnnotationSet = std::map<AnnotationKey, std::set<AbstractConstraint>>;

// Annotation file: list of {api, param, dtype, structure, ndim, shape, range,
// enum, unsupported}. Values are abstract symbols ("D_TYPE"), dependency
// references ("&PARAM.dtype", "&PARAM.shape") or concrete literals; all
// concrete literals of one key form a single AC.
AnnotationSet ParseAnnotations(std::string_view text);
AnnotationSet LoadAnnotations(const std::filesystem::path& path);
// Throws SchemaError if an annotation names an unknown api or parameter.
void CheckAnnotations(const AnnotationSet& annotations, const std::vector<ApiDoc>& corpus);

// One dimension of a shape: "3", "&n" (value of parameter n), "&x.shape[1]",
// or a free symbol such as "batch" or "?".
struct DimTerm {
  enum class Kind { kLiteral, kParamValue, kParamDim, kFree };
  Kind kind = Kind::kFree;
  int64_t value = 0;
  std::string name;
  int index = 0;

  static DimTerm Literal(int64_t v);
  static DimTerm ParamValue(std::string param);
  static DimTerm ParamDim(std::string param, int index);
  static DimTerm Free(std::string symbol);
  static DimTerm Parse(std::string_view text);
  std::string ToString() const;

  bool operator==(const DimTerm&) const = default;
  bool operator<(const DimTerm& o) const {
    return std::tie(kind, value, name, index) < std::tie(o.kind, o.value, o.name, o.index);
  }
};

// One shape alternative: either "&x.shape" or an explicit dimension list.
struct ShapeSpec {
  std::optional<std::string> same_as;
  std::vector<DimTerm> dims;

  static ShapeSpec SameAs(std::string param);
  static ShapeSpec Dims(std::vector<DimTerm> dims);
  static ShapeSpec Parse(std::string_view text);  // "&x.shape" or "[a,3,&n]"
  std::string ToString() const;
  bool HasReference() const;

  bool operator==(const ShapeSpec&) const = default;
  bool operator<(const ShapeSpec& o) const {
    return std::tie(same_as, dims) < std::tie(o.same_as, o.dims);
  }
};

enum class CmpOp { kLt, kLe, kGt, kGe, kEq, kNe };

struct Bound {
  CmpOp op = CmpOp::kGe;
  double value = 0;

  static Bound Parse(std::string_view text);  // ">= 0", "<1.5"
  static std::optional<CmpOp> ParseOp(std::string_view op);
  std::string ToString() const;
  bool Holds(double x) const;

  bool operator==(const Bound&) const = default;
  bool operator<(const Bound& o) const { return std::tie(op, value) < std::tie(o.op, o.value); }
};

// Disjunctive option sets per category, except `range`, whose bounds all
// apply (conjunction). Empty set means unconstrained.
struct ConcreteConstraint {
  std::set<std::string> dtypes;      // canonical names, families, "&x.dtype"
  std::set<std::string> structures;  // scalar, tensor, list, tuple
  std::set<int64_t> ndims;
  std::set<ShapeSpec> shapes;
  std::set<Bound> range;
  std::set<std::string> enums;
  std::set<std::string> unsupported;

  bool Empty() const;
  // Empty apart from `unsupported`.
  bool Unconstrained() const;
  void Merge(const ConcreteConstraint& other);
  // Adds the length of every explicit shape alternative to ndims.
  void Canonicalize();
  // Parameters referenced through &x.dtype, &x.shape, &x.shape[i], &x.
  std::set<std::string> References() const;
  // Concrete dtype entries (no references).
  std::set<std::string> ConcreteDTypes() const;
  std::set<std::string> DTypeRefs() const;
  // Interval implied by the range bounds; nullopt when unbounded on a side.
  std::optional<double> Low() const;
  std::optional<double> High() const;

  nlohmann::json ToJson() const;
  static ConcreteConstraint FromJson(const nlohmann::json& j, const std::string& where);

  bool operator==(const ConcreteConstraint&) const = default;
};

struct DependencyGraph {
  std::vector<std::string> nodes;  // signature order
  // (u, v): v's constraint references u
  std::set<std::pair<std::string, std::string>> edges;
};

struct TopoResult {
  std::vector<std::string> order;
  std::vector<std::pair<std::string, std::string>> dropped;
  std::vector<std::string> warnings;
};

// Kahn's algorithm with ties broken by signature order. Edges whose endpoints
// are not nodes are ignored. A cycle is broken by dropping, among edges on a
// cycle, the one with the lexicographically largest (source, target).
TopoResult TopoOrder(const DependencyGraph& g);

struct ApiConstraints {
  std::string api;
  std::vector<ParamSig> params;
  std::map<std::string, ConcreteConstraint> constraints;
  DependencyGraph graph;

  const ParamSig* FindParam(std::string_view name) const;
  const ConcreteConstraint& For(const std::string& param) const;
  // Rebuilds `graph` from the references in `constraints`.
  void RebuildGraph();
};

using ConstraintSet = std::map<std::string, ApiConstraints>;

// {"apis": {api: {"params": [...], "constraints": {param: {...}},
//                 "dependencies": [[u, v], ...]}}}
nlohmann::json ConstraintsToJson(const ConstraintSet& set);
ConstraintSet ConstraintsFromJson(const nlohmann::json& j);
ConstraintSet LoadConstraints(const std::filesystem::path& path);
std::string SerializeConstraints(const ConstraintSet& set);

// Dtype vocabulary. Concrete dtypes are the names a generated value carries;
// families (int, uint, float, complex, number) stand for several.
const std::vector<std::string>& ConcreteDTypeNames();
bool IsConcreteDType(std::string_view name);
// Concrete dtypes a constraint entry admits ("float" -> float16, bfloat16,
// float32, float64); unknown names admit only themselves.
std::vector<std::string> ExpandDType(std::string_view name);
std::string CanonicalStructure(std::string_view name);

}  // namespace paramspec

#endif  // PARAMSPEC_CONSTRAINTS_H_

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

// Sentence normalization: keywords and literals are replaced by abstract
// tokens (D_TYPE, D_STRUCTURE, CONSTANT_NUM, ...) so that the dependency
// parser and the miner see a small vocabulary.

#ifndef PARAMSPEC_NORMALIZE_H_
#define PARAMSPEC_NORMALIZE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "paramspec/corpus.h"

namespace paramspec {

enum class TokenKind {
  kLiteral,
  kDType,
  kDStructure,
  kConstantNum,
  kConstantFloat,
  kConstantBool,
  kRexpr,
  kParam,
  kEnum,
  kShape,
};

// "D_TYPE", "CONSTANT_NUM", ...; "LITERAL" for kLiteral.
std::string_view KindName(TokenKind kind);
// Only abstract kinds; "LITERAL" is not a valid token form.
std::optional<TokenKind> AbstractKindFromName(std::string_view name);

struct NormToken {
  TokenKind kind = TokenKind::kLiteral;
  // Lowercased surface for literals, the kind name otherwise.
  std::string text;
  // Raw tokens this one was built from.
  std::vector<std::string> surfaces;
  // One entry per collapsed occurrence, e.g. D_TYPE {{float16},{float32}},
  // REXPR {{">=", "0"}}, SHAPE {{"num_classes", "dim"}}.
  std::vector<std::vector<std::string>> payload;

  bool operator==(const NormToken&) const = default;
};

struct NormalizedSentence {
  std::vector<NormToken> tokens;
  std::vector<std::string> warnings;

  // Space separated token texts; this is what the external parser sees.
  std::string Render() const;
  std::vector<std::string> Forms() const;
};

class KeywordTable {
 public:
  // Keys are compared after lowercasing and dropping '-', '_', ' ', '`' and
  // quotes, so "float 32", "float-32" and "Float32" are the same key.
  static std::string Key(std::string_view surface);

  static KeywordTable Parse(std::string_view text);
  static KeywordTable Load(const std::filesystem::path& path);

  void AddDType(std::string_view surface, std::string canonical);
  void AddStructure(std::string_view surface, std::string canonical);

  std::optional<std::string> DType(std::string_view surface) const;
  std::optional<std::string> Structure(std::string_view surface) const;

  bool empty() const { return dtypes_.empty() && structures_.empty(); }
  size_t dtype_count() const { return dtypes_.size(); }
  size_t structure_count() const { return structures_.size(); }
  // Widest token window tried for a keyword match (at least 3, so that
  // "float 32" style splits are found without listing them).
  size_t max_words() const { return max_words_; }

 private:
  std::map<std::string, std::string> dtypes_;
  std::map<std::string, std::string> structures_;
  size_t max_words_ = 3;
};

// Applies the nine rewriting rules in order (dtype, structure, integer,
// float, bool, relational expression, parameter name, quoted enumerand,
// bracketed shape), then collapses same-kind runs. Tokens already equal to a
// kind name are kept abstract so normalizing rendered output is stable.
NormalizedSentence Normalize(const Sentence& sentence, const KeywordTable& table,
                             const std::set<std::string>& param_names);
NormalizedSentence Normalize(std::string_view text, const KeywordTable& table,
                             const std::set<std::string>& param_names);

}  // namespace paramspec

#endif  // PARAMSPEC_NORMALIZE_H_

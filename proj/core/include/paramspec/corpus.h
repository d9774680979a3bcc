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

// API documentation corpus: loading, sentence segmentation, tokenization.
//
// Corpus file layout (JSON):
//   [ {"api": "tf.nn.atrous_conv2d",
//      "params": [{"name": "value", "optional": false, "default": null}, ...],
//      "descriptions": {"value": "A 4-D `Tensor` of type `float`. ...", ...}},
//     ... ]

#ifndef PARAMSPEC_CORPUS_H_
#define PARAMSPEC_CORPUS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paramspec {

struct ParamSig {
  std::string name;
  bool optional = false;
  std::optional<std::string> default_literal;  // raw text, e.g. "None", "'SAME'"

  bool operator==(const ParamSig&) const = default;
};

struct Sentence {
  std::string raw_text;
  std::vector<std::string> tokens;
  std::optional<std::string> tree_ref;  // "<api>/<param>/<index>"

  bool operator==(const Sentence&) const = default;
};

struct ParamDoc {
  std::string param_name;
  std::string raw_text;
  std::vector<Sentence> sentences;

  bool operator==(const ParamDoc&) const = default;
};

struct ApiDoc {
  std::string api_name;
  std::vector<ParamSig> signature_params;
  std::map<std::string, ParamDoc> param_docs;

  const ParamSig* FindParam(std::string_view name) const;
  // Signature names followed by documented names that are not in the
  // signature, each once.
  std::vector<std::string> KnownNames() const;

  bool operator==(const ApiDoc&) const = default;
};

std::vector<ApiDoc> ParseCorpus(std::string_view text);
std::vector<ApiDoc> LoadCorpus(const std::filesystem::path& path);
std::string SerializeCorpus(const std::vector<ApiDoc>& corpus);

std::string SentenceId(std::string_view api, std::string_view param, size_t index);

// Sentence boundaries: '.', '!' or '?' followed by whitespace or end of text,
// outside backquotes, brackets and parentheses. A few abbreviations (e.g.,
// i.e., etc. ...) never end a sentence.
std::vector<Sentence> SegmentSentences(std::string_view description);

// Whitespace split; backquoted, quoted and bracketed spans stay whole;
// , ; : ! ? and a final period split off; comparators are separate tokens.
std::vector<std::string> Tokenize(std::string_view sentence);

}  // namespace paramspec

#endif  // PARAMSPEC_CORPUS_H_

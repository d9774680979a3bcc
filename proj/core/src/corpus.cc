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

#include "paramspec/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

#include "paramspec/errors.h"
#include "paramspec/io.h"

namespace paramspec {
namespace {

using nlohmann::json;

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

constexpr std::array<std::string_view, 7> kAbbreviations = {
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "resp.", "approx."};

bool EndsWithAbbreviation(std::string_view text, size_t dot) {
  size_t begin = dot;
  while (begin > 0 && !IsSpace(text[begin - 1]) && text[begin - 1] != '(') {
    --begin;
  }
  std::string word = Lower(text.substr(begin, dot - begin + 1));
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

// Marks characters inside matched backquote pairs and matched bracket pairs.
std::vector<bool> ProtectedMask(std::string_view text) {
  std::vector<bool> mask(text.size(), false);
  std::vector<size_t> ticks;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '`') ticks.push_back(i);
  }
  for (size_t k = 0; k + 1 < ticks.size(); k += 2) {
    for (size_t i = ticks[k]; i <= ticks[k + 1]; ++i) mask[i] = true;
  }
  const std::vector<bool> in_ticks = mask;
  std::vector<size_t> stack;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_ticks[i]) continue;
    if (c == '(' || c == '[' || c == '{') {
      stack.push_back(i);
    } else if (c == ')' || c == ']' || c == '}') {
      char open = c == ')' ? '(' : c == ']' ? '[' : '{';
      if (!stack.empty() && text[stack.back()] == open) {
        for (size_t j = stack.back(); j <= i; ++j) mask[j] = true;
        stack.pop_back();
      }
    }
  }
  return mask;
}

std::string RequireString(const json& obj, const char* key,
                          const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where, std::string("missing '") + key + "'");
  if (!it->is_string()) {
    throw SchemaError(where + "." + key, "expected a string");
  }
  return it->get<std::string>();
}

}  // namespace

const ParamSig* ApiDoc::FindParam(std::string_view name) const {
  for (const ParamSig& p : signature_params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::vector<std::string> ApiDoc::KnownNames() const {
  std::vector<std::string> names;
  for (const ParamSig& p : signature_params) names.push_back(p.name);
  for (const auto& [name, doc] : param_docs) {
    if (FindParam(name) == nullptr) names.push_back(name);
  }
  return names;
}

std::string SentenceId(std::string_view api, std::string_view param, size_t index) {
  std::string id;
  id.append(api).append("/").append(param).append("/").append(std::to_string(index));
  return id;
}

std::vector<Sentence> SegmentSentences(std::string_view description) {
  std::vector<Sentence> out;
  std::vector<bool> mask = ProtectedMask(description);
  auto emit = [&](size_t begin, size_t end) {
    std::string_view piece = Trim(description.substr(begin, end - begin));
    if (piece.empty()) return;
    Sentence s;
    s.raw_text = std::string(piece);
    s.tokens = Tokenize(s.raw_text);
    out.push_back(std::move(s));
  };
  size_t start = 0;
  for (size_t i = 0; i < description.size(); ++i) {
    char c = description[i];
    if (mask[i] || (c != '.' && c != '!' && c != '?')) continue;
    if (i + 1 < description.size() && !IsSpace(description[i + 1])) continue;
    if (c == '.' && i > 0 && description[i - 1] == '.') continue;  // ellipsis
    if (c == '.' && i + 1 < description.size() &&
        EndsWithAbbreviation(description, i)) {
      continue;
    }
    emit(start, i + 1);
    start = i + 1;
  }
  emit(start, description.size());
  return out;
}

std::vector<std::string> Tokenize(std::string_view s) {
  std::vector<std::string> tokens;
  const size_t n = s.size();
  auto is_break = [](char c) {
    return IsSpace(c) || std::string_view(",;:!?<>`[({)]}").find(c) !=
                             std::string_view::npos;
  };
  size_t i = 0;
  while (i < n) {
    char c = s[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (c == '`') {
      size_t close = s.find('`', i + 1);
      if (close != std::string_view::npos) {
        tokens.emplace_back(s.substr(i, close - i + 1));
        i = close + 1;
        continue;
      }
      tokens.emplace_back(1, c);
      ++i;
      continue;
    }
    if (c == '(' || c == '[' || c == '{') {
      char open = c;
      char close = c == '(' ? ')' : c == '[' ? ']' : '}';
      int depth = 0;
      size_t j = i;
      for (; j < n; ++j) {
        if (s[j] == open) ++depth;
        if (s[j] == close && --depth == 0) break;
      }
      if (j < n) {
        tokens.emplace_back(s.substr(i, j - i + 1));
        i = j + 1;
      } else {
        tokens.emplace_back(1, c);
        ++i;
      }
      continue;
    }
    if ((c == '\'' || c == '"') && (i == 0 || !IsAlnum(s[i - 1]))) {
      size_t j = i + 1;
      size_t close = std::string_view::npos;
      for (; j < n; ++j) {
        if (s[j] == c && j > i + 1 && (j + 1 == n || !IsAlnum(s[j + 1]))) {
          close = j;
          break;
        }
      }
      if (close != std::string_view::npos) {
        tokens.emplace_back(s.substr(i, close - i + 1));
        i = close + 1;
        continue;
      }
    }
    if (c == '<' || c == '>' || ((c == '=' || c == '!') && i + 1 < n && s[i + 1] == '=')) {
      if (i + 1 < n && s[i + 1] == '=') {
        tokens.emplace_back(s.substr(i, 2));
        i += 2;
      } else {
        tokens.emplace_back(1, c);
        ++i;
      }
      continue;
    }
    if (is_break(c)) {
      tokens.emplace_back(1, c);
      ++i;
      continue;
    }
    size_t j = i;
    while (j < n && !is_break(s[j])) {
      if (s[j] == '=' && j + 1 < n && s[j + 1] == '=') break;
      ++j;
    }
    std::string word(s.substr(i, j - i));
    i = j;
    if (word.size() > 1 && word.back() == '.' && word != "..." &&
        word[word.size() - 2] != '.' &&
        std::find(kAbbreviations.begin(), kAbbreviations.end(), Lower(word)) ==
            kAbbreviations.end()) {
      word.pop_back();
      tokens.push_back(std::move(word));
      tokens.emplace_back(".");
    } else {
      tokens.push_back(std::move(word));
    }
  }
  return tokens;
}

std::vector<ApiDoc> ParseCorpus(std::string_view text) {
  json root = ParseJson(text, "corpus");
  if (!root.is_array()) throw SchemaError("corpus", "expected a list of APIs");
  std::vector<ApiDoc> corpus;
  std::set<std::string> seen;
  for (size_t a = 0; a < root.size(); ++a) {
    const std::string where = "corpus[" + std::to_string(a) + "]";
    const json& entry = root[a];
    if (!entry.is_object()) throw SchemaError(where, "expected an object");
    ApiDoc doc;
    doc.api_name = RequireString(entry, "api", where);
    if (doc.api_name.empty()) throw SchemaError(where + ".api", "empty API name");
    if (!seen.insert(doc.api_name).second) {
      throw DuplicateError("duplicate API '" + doc.api_name + "' at " + where);
    }
    auto params = entry.find("params");
    if (params == entry.end() || !params->is_array()) {
      throw SchemaError(where + ".params", "expected a list");
    }
    std::set<std::string> names;
    for (size_t p = 0; p < params->size(); ++p) {
      const std::string pwhere = where + ".params[" + std::to_string(p) + "]";
      const json& pj = (*params)[p];
      if (!pj.is_object()) throw SchemaError(pwhere, "expected an object");
      ParamSig sig;
      sig.name = RequireString(pj, "name", pwhere);
      if (sig.name.empty()) throw SchemaError(pwhere + ".name", "empty name");
      if (auto o = pj.find("optional"); o != pj.end()) {
        if (!o->is_boolean()) throw SchemaError(pwhere + ".optional", "expected a boolean");
        sig.optional = o->get<bool>();
      }
      if (auto d = pj.find("default"); d != pj.end() && !d->is_null()) {
        if (!d->is_string()) {
          throw SchemaError(pwhere + ".default", "expected a string or null");
        }
        sig.default_literal = d->get<std::string>();
      }
      if (!names.insert(sig.name).second) {
        throw DuplicateError("duplicate parameter '" + sig.name + "' in " +
                             doc.api_name);
      }
      doc.signature_params.push_back(std::move(sig));
    }
    if (auto descs = entry.find("descriptions"); descs != entry.end()) {
      if (!descs->is_object()) {
        throw SchemaError(where + ".descriptions", "expected an object");
      }
      for (const auto& [name, value] : descs->items()) {
        if (!value.is_string()) {
          throw SchemaError(where + ".descriptions." + name, "expected a string");
        }
        ParamDoc pd;
        pd.param_name = name;
        pd.raw_text = value.get<std::string>();
        pd.sentences = SegmentSentences(pd.raw_text);
        for (size_t k = 0; k < pd.sentences.size(); ++k) {
          pd.sentences[k].tree_ref = SentenceId(doc.api_name, name, k);
        }
        doc.param_docs.emplace(name, std::move(pd));
      }
    }
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

std::vector<ApiDoc> LoadCorpus(const std::filesystem::path& path) {
  return ParseCorpus(ReadFile(path));
}

std::string SerializeCorpus(const std::vector<ApiDoc>& corpus) {
  json root = json::array();
  for (const ApiDoc& doc : corpus) {
    json entry;
    entry["api"] = doc.api_name;
    json params = json::array();
    for (const ParamSig& p : doc.signature_params) {
      json pj;
      pj["name"] = p.name;
      pj["optional"] = p.optional;
      pj["default"] = p.default_literal ? json(*p.default_literal) : json(nullptr);
      params.push_back(std::move(pj));
    }
    entry["params"] = std::move(params);
    json descs = json::object();
    for (const auto& [name, pd] : doc.param_docs) descs[name] = pd.raw_text;
    entry["descriptions"] = std::move(descs);
    root.push_back(std::move(entry));
  }
  return CanonicalDump(root);
}

}  // namespace paramspec

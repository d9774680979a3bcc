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

#include "paramspec/normalize.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include <nlohmann/json.hpp>

#include "paramspec/errors.h"
#include "paramspec/io.h"

namespace paramspec {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<TokenKind, std::string_view>, 10> kKindNames = {{
    {TokenKind::kLiteral, "LITERAL"},
    {TokenKind::kDType, "D_TYPE"},
    {TokenKind::kDStructure, "D_STRUCTURE"},
    {TokenKind::kConstantNum, "CONSTANT_NUM"},
    {TokenKind::kConstantFloat, "CONSTANT_FLOAT"},
    {TokenKind::kConstantBool, "CONSTANT_BOOL"},
    {TokenKind::kRexpr, "REXPR"},
    {TokenKind::kParam, "PARAM"},
    {TokenKind::kEnum, "ENUM"},
    {TokenKind::kShape, "SHAPE"},
}};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view StripTicks(std::string_view s) {
  if (s.size() >= 2 && s.front() == '`' && s.back() == '`') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

bool IsQuoted(std::string_view s) {
  return s.size() >= 2 && (s.front() == '\'' || s.front() == '"') &&
         s.back() == s.front();
}

bool IsInteger(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), IsDigit);
}

bool IsFloat(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  size_t i = 0;
  size_t int_digits = 0, frac_digits = 0;
  while (i < s.size() && IsDigit(s[i])) ++i, ++int_digits;
  bool dot = false, exp = false;
  if (i < s.size() && s[i] == '.') {
    dot = true;
    ++i;
    while (i < s.size() && IsDigit(s[i])) ++i, ++frac_digits;
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    exp = true;
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t e = 0;
    while (i < s.size() && IsDigit(s[i])) ++i, ++e;
    if (e == 0) return false;
  }
  return i == s.size() && (dot || exp);
}

bool IsIdentifier(std::string_view s) {
  return !s.empty() && IsIdentStart(s[0]) && std::all_of(s.begin(), s.end(), IsIdentChar);
}

bool IsLowerIdentifier(std::string_view s) {
  return IsIdentifier(s) && std::none_of(s.begin(), s.end(), [](char c) {
           return std::isupper(static_cast<unsigned char>(c));
         });
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool IsBracketSpan(std::string_view s) {
  if (s.size() < 2) return false;
  return (s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')') ||
         (s.front() == '{' && s.back() == '}');
}

// Elements of a shape-like span, or nullopt.
std::optional<std::vector<std::string>> ShapeElements(std::string_view raw) {
  std::string_view s = StripTicks(raw);
  if (s.size() < 2) return std::nullopt;
  bool square = s.front() == '[' && s.back() == ']';
  bool paren = s.front() == '(' && s.back() == ')';
  if (!square && !paren) return std::nullopt;
  std::string_view inner = Trim(s.substr(1, s.size() - 2));
  std::vector<std::string> elems;
  if (inner.empty()) {
    if (square) return elems;
    return std::nullopt;
  }
  bool any_int = false;
  size_t start = 0;
  while (true) {
    size_t comma = inner.find(',', start);
    std::string_view e = Trim(inner.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start));
    if (e.empty()) {
      // trailing comma as in the 1-tuple "(3,)"
      if (comma != std::string_view::npos || elems.empty()) return std::nullopt;
    } else if (IsInteger(e) && e[0] != '-' && e[0] != '+') {
      any_int = true;
      elems.emplace_back(e);
    } else if (IsIdentifier(e) || e == "..." || e == "?") {
      elems.emplace_back(e);
    } else {
      return std::nullopt;
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (paren && elems.size() < 2 && !any_int) return std::nullopt;
  return elems;
}

std::optional<int> DimensionPrefix(std::string_view s, std::string* rest) {
  size_t i = 0;
  while (i < s.size() && IsDigit(s[i])) ++i;
  if (i == 0) return std::nullopt;
  std::string tail = Lower(s.substr(i));
  if (!tail.empty() && tail[0] == '-') tail.erase(0, 1);
  if (tail == "d" || tail == "dimensional" || tail == "dim") {
    *rest = tail;
    return std::stoi(std::string(s.substr(0, i)));
  }
  return std::nullopt;
}

bool IsSeparator(const NormToken& t) {
  return t.kind == TokenKind::kLiteral &&
         (t.text == "," || t.text == "or" || t.text == "and" || t.text == "/");
}

NormToken MakeLiteral(std::string raw) {
  NormToken t;
  t.kind = TokenKind::kLiteral;
  t.text = Lower(StripTicks(raw));
  t.surfaces.push_back(std::move(raw));
  return t;
}

NormToken MakeAbstract(TokenKind kind, std::vector<std::string> surfaces,
                       std::vector<std::string> payload) {
  NormToken t;
  t.kind = kind;
  t.text = std::string(KindName(kind));
  t.surfaces = std::move(surfaces);
  if (!payload.empty() || kind == TokenKind::kShape) t.payload.push_back(std::move(payload));
  return t;
}

// Expands non-shape bracket spans and multi-word backquoted spans into their
// tokens, and splits "4-D" style dimension tokens.
void Expand(const std::vector<std::string>& raw, std::vector<std::string>* out) {
  for (size_t i = 0; i < raw.size(); ++i) {
    const std::string& tok = raw[i];
    std::string_view stripped = StripTicks(tok);
    if (IsBracketSpan(stripped) && !ShapeElements(tok)) {
      out->emplace_back(1, stripped.front());
      Expand(Tokenize(stripped.substr(1, stripped.size() - 2)), out);
      out->emplace_back(1, stripped.back());
      continue;
    }
    if (stripped.size() != tok.size() &&
        stripped.find_first_of(" \t") != std::string_view::npos) {
      Expand(Tokenize(stripped), out);
      continue;
    }
    std::string rest;
    if (auto dims = DimensionPrefix(stripped, &rest)) {
      out->push_back(std::to_string(*dims));
      out->push_back("d");
      continue;
    }
    std::string low = Lower(stripped);
    if (low == "dimensional" && !out->empty() &&
        IsInteger(out->back())) {
      out->push_back("d");
      continue;
    }
    out->push_back(tok);
  }
}

struct RexprForm {
  std::vector<std::string_view> words;
  std::string_view op;
};

const std::vector<RexprForm>& RexprForms() {
  static const std::vector<RexprForm> forms = [] {
    std::vector<RexprForm> f = {
        {{"greater", "than", "or", "equal", "to"}, ">="},
        {{"less", "than", "or", "equal", "to"}, "<="},
        {{"larger", "than", "or", "equal", "to"}, ">="},
        {{"smaller", "than", "or", "equal", "to"}, "<="},
        {{"at", "least"}, ">="},
        {{"at", "most"}, "<="},
        {{"greater", "than"}, ">"},
        {{"larger", "than"}, ">"},
        {{"less", "than"}, "<"},
        {{"smaller", "than"}, "<"},
        {{"<="}, "<="},
        {{">="}, ">="},
        {{"=="}, "=="},
        {{"!="}, "!="},
        {{"<"}, "<"},
        {{">"}, ">"},
    };
    return f;
  }();
  return forms;
}

class Normalizer {
 public:
  Normalizer(const KeywordTable& table, const std::set<std::string>& params)
      : table_(table), params_(params) {
    for (const std::string& p : params_) lower_params_.emplace(Lower(p), p);
  }

  NormalizedSentence Run(const std::vector<std::string>& raw) {
    std::vector<std::string> expanded;
    Expand(raw, &expanded);
    toks_.clear();
    for (std::string& r : expanded) {
      if (auto kind = AbstractKindFromName(r)) {
        toks_.push_back(MakeAbstract(*kind, {r}, {}));
      } else {
        toks_.push_back(MakeLiteral(std::move(r)));
      }
    }
    KeywordRule(TokenKind::kDType);
    KeywordRule(TokenKind::kDStructure);
    SimpleRule(TokenKind::kConstantNum, [](std::string_view s) -> std::optional<std::string> {
      if (IsInteger(s)) return std::string(s[0] == '+' ? s.substr(1) : s);
      return std::nullopt;
    });
    SimpleRule(TokenKind::kConstantFloat, [](std::string_view s) -> std::optional<std::string> {
      if (IsFloat(s)) return std::string(s);
      return std::nullopt;
    });
    SimpleRule(TokenKind::kConstantBool, [](std::string_view s) -> std::optional<std::string> {
      std::string l = Lower(s);
      if (l == "true" || l == "false") return l;
      return std::nullopt;
    });
    RexprRule();
    ParamRule();
    SimpleRawRule(TokenKind::kEnum, [](std::string_view raw) -> std::optional<std::vector<std::string>> {
      std::string_view s = StripTicks(raw);
      if (IsQuoted(s)) return std::vector<std::string>{std::string(s.substr(1, s.size() - 2))};
      return std::nullopt;
    });
    SimpleRawRule(TokenKind::kShape, [](std::string_view raw) { return ShapeElements(raw); });

    if (!toks_.empty() && toks_.back().kind == TokenKind::kLiteral &&
        (toks_.back().text == "." || toks_.back().text == "!" || toks_.back().text == "?")) {
      toks_.pop_back();
    }
    NormalizedSentence out;
    out.tokens = Collapse();
    out.warnings = std::move(warnings_);
    return out;
  }

 private:
  bool Literal(size_t i) const { return toks_[i].kind == TokenKind::kLiteral; }
  std::string_view Raw(size_t i) const { return toks_[i].surfaces.front(); }

  void Replace(size_t begin, size_t end, NormToken t) {
    toks_.erase(toks_.begin() + static_cast<long>(begin) + 1,
                toks_.begin() + static_cast<long>(end));
    toks_[begin] = std::move(t);
  }

  void KeywordRule(TokenKind kind) {
    const size_t max_w = table_.max_words();
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (!Literal(i)) continue;
      for (size_t w = std::min(max_w, toks_.size() - i); w >= 1; --w) {
        bool ok = true;
        std::string joined;
        std::vector<std::string> surfaces;
        for (size_t k = i; k < i + w; ++k) {
          if (!Literal(k) || (w > 1 && !IsIdentChar(toks_[k].text.empty() ? ' ' : toks_[k].text[0]))) {
            ok = false;
            break;
          }
          if (!joined.empty()) joined += ' ';
          joined += std::string(Raw(k));
          surfaces.emplace_back(Raw(k));
        }
        if (!ok) continue;
        std::optional<std::string> canonical =
            kind == TokenKind::kDType ? table_.DType(joined) : table_.Structure(joined);
        if (!canonical) continue;
        std::string key = KeywordTable::Key(joined);
        for (const std::string& p : params_) {
          if (KeywordTable::Key(p) == key) {
            warnings_.push_back("parameter name '" + p + "' collides with " +
                                std::string(KindName(kind)) + " keyword '" + joined + "'");
          }
        }
        Replace(i, i + w, MakeAbstract(kind, std::move(surfaces), {*canonical}));
        break;
      }
    }
  }

  template <typename F>
  void SimpleRule(TokenKind kind, F match) {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (!Literal(i)) continue;
      std::string_view s = StripTicks(Raw(i));
      if (auto v = match(s)) {
        toks_[i] = MakeAbstract(kind, {std::string(Raw(i))}, {*v});
      }
    }
  }

  template <typename F>
  void SimpleRawRule(TokenKind kind, F match) {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (!Literal(i)) continue;
      if (auto v = match(Raw(i))) {
        toks_[i] = MakeAbstract(kind, {std::string(Raw(i))}, std::move(*v));
      }
    }
  }

  std::optional<std::string> ParamName(size_t i) const {
    if (!Literal(i)) return std::nullopt;
    std::string_view raw = Raw(i);
    std::string_view s = StripTicks(raw);
    if (params_.count(std::string(s))) return std::string(s);
    if (auto it = lower_params_.find(Lower(s)); it != lower_params_.end() && s == raw) {
      return it->second;
    }
    if (s.size() != raw.size() && IsLowerIdentifier(s) && s != "none" && s != "null") {
      return std::string(s);
    }
    return std::nullopt;
  }

  void RexprRule() {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (!Literal(i)) continue;
      for (const RexprForm& form : RexprForms()) {
        size_t n = form.words.size();
        if (i + n >= toks_.size()) continue;
        bool ok = true;
        for (size_t k = 0; k < n && ok; ++k) {
          ok = Literal(i + k) && toks_[i + k].text == form.words[k];
        }
        if (!ok) continue;
        const NormToken& operand = toks_[i + n];
        std::string value;
        if ((operand.kind == TokenKind::kConstantNum || operand.kind == TokenKind::kConstantFloat) &&
            !operand.payload.empty()) {
          value = operand.payload[0][0];
        } else if (auto p = ParamName(i + n)) {
          value = *p;
        } else {
          continue;
        }
        std::vector<std::string> surfaces;
        for (size_t k = i; k <= i + n; ++k) {
          surfaces.insert(surfaces.end(), toks_[k].surfaces.begin(), toks_[k].surfaces.end());
        }
        Replace(i, i + n + 1,
                MakeAbstract(TokenKind::kRexpr, std::move(surfaces), {std::string(form.op), value}));
        break;
      }
    }
  }

  void ParamRule() {
    for (size_t i = 0; i < toks_.size(); ++i) {
      if (auto p = ParamName(i)) {
        toks_[i] = MakeAbstract(TokenKind::kParam, {std::string(Raw(i))}, {*p});
      }
    }
  }

  std::vector<NormToken> Collapse() {
    std::vector<NormToken> out;
    size_t i = 0;
    while (i < toks_.size()) {
      NormToken t = toks_[i];
      ++i;
      if (t.kind == TokenKind::kLiteral) {
        out.push_back(std::move(t));
        continue;
      }
      // absorb "K , K or K" and "K K"
      while (i < toks_.size()) {
        size_t j = i;
        while (j < toks_.size() && IsSeparator(toks_[j])) ++j;
        if (j < toks_.size() && toks_[j].kind == t.kind) {
          t.surfaces.insert(t.surfaces.end(), toks_[j].surfaces.begin(), toks_[j].surfaces.end());
          t.payload.insert(t.payload.end(), toks_[j].payload.begin(), toks_[j].payload.end());
          i = j + 1;
        } else {
          break;
        }
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  const KeywordTable& table_;
  const std::set<std::string>& params_;
  std::map<std::string, std::string> lower_params_;
  std::vector<NormToken> toks_;
  std::vector<std::string> warnings_;
};

}  // namespace

std::string_view KindName(TokenKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "LITERAL";
}

std::optional<TokenKind> AbstractKindFromName(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (k != TokenKind::kLiteral && n == name) return k;
  }
  return std::nullopt;
}

std::string NormalizedSentence::Render() const {
  std::string out;
  for (const NormToken& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

std::vector<std::string> NormalizedSentence::Forms() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const NormToken& t : tokens) out.push_back(t.text);
  return out;
}

std::string KeywordTable::Key(std::string_view surface) {
  std::string out;
  for (char c : surface) {
    if (c == '-' || c == '_' || c == ' ' || c == '`' || c == '\'' || c == '"') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

void KeywordTable::AddDType(std::string_view surface, std::string canonical) {
  std::string key = Key(surface);
  if (structures_.count(key)) {
    throw SchemaError("keywords", "'" + std::string(surface) + "' is both a dtype and a structure");
  }
  dtypes_[key] = std::move(canonical);
  max_words_ = std::max<size_t>(max_words_, 1 + std::count(surface.begin(), surface.end(), ' '));
}

void KeywordTable::AddStructure(std::string_view surface, std::string canonical) {
  std::string key = Key(surface);
  if (dtypes_.count(key)) {
    throw SchemaError("keywords", "'" + std::string(surface) + "' is both a dtype and a structure");
  }
  structures_[key] = std::move(canonical);
  max_words_ = std::max<size_t>(max_words_, 1 + std::count(surface.begin(), surface.end(), ' '));
}

std::optional<std::string> KeywordTable::DType(std::string_view surface) const {
  auto it = dtypes_.find(Key(surface));
  if (it == dtypes_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> KeywordTable::Structure(std::string_view surface) const {
  auto it = structures_.find(Key(surface));
  if (it == structures_.end()) return std::nullopt;
  return it->second;
}

KeywordTable KeywordTable::Parse(std::string_view text) {
  json root = ParseJson(text, "keywords");
  if (!root.is_object()) throw SchemaError("keywords", "expected an object");
  KeywordTable table;
  for (const char* list : {"dtypes", "structures"}) {
    auto it = root.find(list);
    if (it == root.end() || !it->is_array()) {
      throw SchemaError(std::string("keywords.") + list, "expected a list");
    }
    for (size_t i = 0; i < it->size(); ++i) {
      const json& e = (*it)[i];
      std::string where = std::string("keywords.") + list + "[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("surface") || !e.contains("canonical") ||
          !e["surface"].is_string() || !e["canonical"].is_string()) {
        throw SchemaError(where, "expected {surface, canonical} strings");
      }
      std::string surface = e["surface"].get<std::string>();
      if (Key(surface).empty()) throw SchemaError(where + ".surface", "empty keyword");
      if (std::string_view(list) == "dtypes") {
        table.AddDType(surface, e["canonical"].get<std::string>());
      } else {
        table.AddStructure(surface, e["canonical"].get<std::string>());
      }
    }
  }
  return table;
}

KeywordTable KeywordTable::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

NormalizedSentence Normalize(const Sentence& sentence, const KeywordTable& table,
                             const std::set<std::string>& param_names) {
  Normalizer n(table, param_names);
  return n.Run(sentence.tokens);
}

NormalizedSentence Normalize(std::string_view text, const KeywordTable& table,
                             const std::set<std::string>& param_names) {
  Normalizer n(table, param_names);
  return n.Run(Tokenize(text));
}

}  // namespace paramspec

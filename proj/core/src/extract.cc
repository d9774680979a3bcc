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

#include "paramspec/extract.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

#include "paramspec/errors.h"
#include "paramspec/io.h"

namespace paramspec {

using nlohmann::json;

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsIntegerText(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<double> NumberText(std::string_view s) {
  try {
    size_t used = 0;
    double v = std::stod(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

bool Aligned(const NormalizedSentence& norm, const DepTree& tree) {
  if (norm.tokens.size() != tree.size()) return false;
  for (size_t i = 0; i < tree.size(); ++i) {
    if (Lower(tree.node(static_cast<int>(i)).form) != Lower(norm.tokens[i].text)) return false;
  }
  return true;
}

// Adds what one payload occurrence says about `category` to `out`.
void Instantiate(Category category, const std::vector<std::string>& payload,
                 const std::string& self, const std::set<std::string>& known,
                 ConcreteConstraint* out, std::vector<std::string>* warnings) {
  switch (category) {
    case Category::kDType:
      if (!payload.empty()) out->dtypes.insert(payload[0]);
      break;
    case Category::kStructure:
      if (!payload.empty()) out->structures.insert(CanonicalStructure(payload[0]));
      break;
    case Category::kNdim:
      if (!payload.empty() && IsIntegerText(payload[0])) {
        int64_t n = std::stoll(payload[0]);
        if (n >= 0) out->ndims.insert(n);
      }
      break;
    case Category::kShape: {
      std::vector<DimTerm> dims;
      for (const std::string& e : payload) {
        if (IsIntegerText(e)) {
          dims.push_back(DimTerm::Literal(std::stoll(e)));
        } else if (e != self && known.count(e)) {
          dims.push_back(DimTerm::ParamValue(e));
        } else {
          dims.push_back(DimTerm::Free(e == "..." ? "?" : e));
        }
      }
      out->shapes.insert(ShapeSpec::Dims(std::move(dims)));
      break;
    }
    case Category::kValueEnum:
      if (!payload.empty()) out->enums.insert(payload[0]);
      break;
    case Category::kValueRange: {
      if (payload.size() != 2) break;
      auto op = Bound::ParseOp(payload[0]);
      if (!op) break;
      if (auto v = NumberText(payload[1])) {
        out->range.insert(Bound{*op, *v});
      } else {
        // A bound relative to another parameter is outside the constraint
        // language; keep it visible.
        out->unsupported.insert("range " + payload[0] + " &" + payload[1]);
        warnings->push_back(self + ": relative range '" + payload[0] + " " + payload[1] +
                            "' kept as unsupported");
      }
      break;
    }
    case Category::kDepDType:
      if (!payload.empty() && payload[0] != self) out->dtypes.insert("&" + payload[0] + ".dtype");
      break;
    case Category::kDepShape:
      if (!payload.empty() && payload[0] != self) out->shapes.insert(ShapeSpec::SameAs(payload[0]));
      break;
    case Category::kUnsupported:
      break;
  }
}

void InstantiateConcrete(const AbstractConstraint& ac, ConcreteConstraint* out) {
  for (const std::string& s : ac.slots) {
    switch (ac.category) {
      case Category::kDType:
        out->dtypes.insert(s);
        break;
      case Category::kStructure:
        out->structures.insert(CanonicalStructure(s));
        break;
      case Category::kNdim:
        if (IsIntegerText(s)) out->ndims.insert(std::stoll(s));
        break;
      case Category::kShape:
        out->shapes.insert(ShapeSpec::Parse(s));
        break;
      case Category::kValueEnum:
        out->enums.insert(s);
        break;
      case Category::kValueRange:
        out->range.insert(Bound::Parse(s));
        break;
      case Category::kDepDType:
      case Category::kDepShape:
        break;
      case Category::kUnsupported:
        out->unsupported.insert(s);
        break;
    }
  }
}

bool StartsWithNumberOf(const NormalizedSentence& s) {
  size_t i = 0;
  while (i < s.tokens.size() && s.tokens[i].kind == TokenKind::kLiteral &&
         (s.tokens[i].text == "the" || s.tokens[i].text == "a")) {
    ++i;
  }
  return i + 1 < s.tokens.size() && s.tokens[i].text == "number" && s.tokens[i + 1].text == "of";
}

ApiConstraints ExtractApi(const PreparedApi& api, const std::vector<ExtractionRule>& rules,
                          const ExtractOptions& options, std::vector<std::string>* warnings) {
  ApiConstraints out;
  out.api = api.doc.api_name;
  out.params = api.doc.signature_params;
  std::vector<std::string> names = api.doc.KnownNames();
  std::set<std::string> known(names.begin(), names.end());
  for (const ParamSig& sig : api.doc.signature_params) {
    auto it = std::find_if(api.params.begin(), api.params.end(),
                           [&](const PreparedParam& p) { return p.param == sig.name; });
    ConcreteConstraint c;
    if (it != api.params.end()) c = ExtractParam(*it, rules, known, options, warnings);
    out.constraints.emplace(sig.name, std::move(c));
  }
  out.RebuildGraph();
  return out;
}

}  // namespace

std::vector<DepTree> PreparedParam::Trees() const {
  std::vector<DepTree> out;
  for (const PreparedSentence& s : sentences) {
    if (s.tree) out.push_back(*s.tree);
  }
  return out;
}

std::vector<PreparedApi> Prepare(const std::vector<ApiDoc>& corpus, const KeywordTable& table,
                                 const std::map<std::string, DepTree>& trees) {
  std::vector<PreparedApi> out;
  out.reserve(corpus.size());
  for (const ApiDoc& doc : corpus) {
    PreparedApi api;
    api.doc = doc;
    std::vector<std::string> names = doc.KnownNames();
    std::set<std::string> known(names.begin(), names.end());
    for (const auto& [name, pd] : doc.param_docs) {
      PreparedParam p;
      p.api = doc.api_name;
      p.param = name;
      p.raw_text = pd.raw_text;
      for (size_t i = 0; i < pd.sentences.size(); ++i) {
        const Sentence& s = pd.sentences[i];
        PreparedSentence ps;
        ps.id = s.tree_ref.value_or(SentenceId(doc.api_name, name, i));
        ps.norm = Normalize(s, table, known);
        for (const std::string& w : ps.norm.warnings) p.warnings.push_back(ps.id + ": " + w);
        if (auto t = trees.find(ps.id); t != trees.end()) {
          ps.tree = t->second;
          ps.aligned = Aligned(ps.norm, t->second);
          if (!ps.aligned) {
            p.warnings.push_back(ps.id + ": parse tree tokens differ from the normalized sentence");
          }
        } else {
          p.warnings.push_back(ps.id + ": no parse tree");
        }
        p.sentences.push_back(std::move(ps));
      }
      api.params.push_back(std::move(p));
    }
    out.push_back(std::move(api));
  }
  return out;
}

std::string_view DocBugKindName(DocBugKind k) {
  switch (k) {
    case DocBugKind::kFormatting:
      return "FORMATTING";
    case DocBugKind::kSignatureMismatch:
      return "SIGNATURE_MISMATCH";
    case DocBugKind::kUnresolvedDependency:
      return "UNRESOLVED_DEPENDENCY";
  }
  return "FORMATTING";
}

json DocBug::ToJson() const {
  return {{"api", api}, {"kind", std::string(DocBugKindName(kind))}, {"detail", detail},
          {"names", names}};
}

std::string ExtractionResult::SerializeDocBugs() const {
  json j = json::array();
  for (const DocBug& b : doc_bugs) j.push_back(b.ToJson());
  return CanonicalDump(j);
}

ConcreteConstraint ExtractParam(const PreparedParam& param, const std::vector<ExtractionRule>& rules,
                                const std::set<std::string>& known_names,
                                const ExtractOptions& options, std::vector<std::string>* warnings) {
  ConcreteConstraint out;
  for (const PreparedSentence& s : param.sentences) {
    if (!s.tree) continue;
    MatchHost host = MatchHost::FromTree(*s.tree);
    // category -> token positions that filled it in this sentence
    std::map<Category, std::set<int>> filled;
    for (const ExtractionRule& rule : rules) {
      if (!Matches(rule.pattern, host)) continue;
      if (!rule.ac.IsAbstract()) {
        InstantiateConcrete(rule.ac, &out);
        continue;
      }
      if (!s.aligned) continue;
      auto emb = LeftmostEmbedding(rule.pattern, *s.tree);
      if (!emb) continue;
      std::string_view symbol = SlotSymbol(rule.ac.category);
      for (size_t k = 0; k < rule.pattern.size(); ++k) {
        if (rule.pattern.node(static_cast<int>(k)).label != symbol) continue;
        int tok = (*emb)[k];
        const NormToken& t = s.norm.tokens[static_cast<size_t>(tok)];
        filled[rule.ac.category].insert(tok);
        for (const std::vector<std::string>& occ : t.payload) {
          Instantiate(rule.ac.category, occ, param.param, known_names, &out, warnings);
        }
        break;
      }
    }
    for (const auto& [cat, toks] : filled) {
      if (toks.size() > 1) {
        warnings->push_back(s.id + ": " + std::string(CategoryName(cat)) + " filled from " +
                            std::to_string(toks.size()) + " token positions");
      }
    }
  }
  if (options.number_of_heuristic && !param.sentences.empty() &&
      StartsWithNumberOf(param.sentences.front().norm)) {
    if (out.dtypes.empty()) out.dtypes.insert("int");
    if (out.ndims.empty()) out.ndims.insert(0);
    if (out.range.empty()) out.range.insert(Bound{CmpOp::kGe, 0});
  }
  out.Canonicalize();
  return out;
}

ExtractionResult Extract(const std::vector<PreparedApi>& corpus,
                         const std::vector<ExtractionRule>& rules, const ExtractOptions& options) {
  std::vector<ApiConstraints> apis(corpus.size());
  std::vector<std::vector<std::string>> warnings(corpus.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < corpus.size(); i = next++) {
      apis[i] = ExtractApi(corpus[i], rules, options, &warnings[i]);
    }
  };
  size_t jobs = std::clamp<size_t>(static_cast<size_t>(std::max(options.jobs, 1)), 1,
                                   std::max<size_t>(corpus.size(), 1));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  ExtractionResult result;
  for (size_t i = 0; i < corpus.size(); ++i) {
    for (const PreparedParam& p : corpus[i].params) {
      result.warnings.insert(result.warnings.end(), p.warnings.begin(), p.warnings.end());
    }
    result.warnings.insert(result.warnings.end(), warnings[i].begin(), warnings[i].end());
    result.constraints.emplace(apis[i].api, std::move(apis[i]));
  }
  result.doc_bugs = DetectDocBugs(corpus, result);
  return result;
}

std::vector<DocBug> DetectDocBugs(const std::vector<PreparedApi>& corpus,
                                  const ExtractionResult& result) {
  std::vector<DocBug> bugs;
  for (const PreparedApi& api : corpus) {
    const ApiDoc& doc = api.doc;
    auto in_signature = [&](const std::string& n) { return doc.FindParam(n) != nullptr; };
    std::set<std::pair<DocBugKind, std::string>> seen;
    auto report = [&](DocBugKind kind, const std::string& name, std::string detail) {
      if (!seen.insert({kind, name}).second) return;
      bugs.push_back(DocBug{doc.api_name, kind, std::move(detail), {name}});
    };

    std::set<std::string> dependency_sources;
    if (auto it = result.constraints.find(doc.api_name); it != result.constraints.end()) {
      for (const auto& [u, v] : it->second.graph.edges) {
        dependency_sources.insert(u);
        if (!in_signature(u)) {
          report(DocBugKind::kUnresolvedDependency, u,
                 "'" + v + "' depends on '" + u + "', which is not a parameter");
        } else if (!doc.param_docs.count(u)) {
          report(DocBugKind::kUnresolvedDependency, u,
                 "'" + v + "' depends on '" + u + "', which is not documented");
        }
      }
    }

    for (const ParamSig& sig : doc.signature_params) {
      auto it = doc.param_docs.find(sig.name);
      if (it == doc.param_docs.end()) {
        report(DocBugKind::kFormatting, sig.name, "'" + sig.name + "' has no description");
        continue;
      }
      std::string_view text = it->second.raw_text;
      bool blank = std::all_of(text.begin(), text.end(),
                               [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      if (blank || it->second.sentences.empty()) {
        report(DocBugKind::kFormatting, sig.name, "'" + sig.name + "' has an empty description");
      }
    }
    for (const PreparedParam& p : api.params) {
      for (const PreparedSentence& s : p.sentences) {
        if (!s.tree && in_signature(p.param)) {
          report(DocBugKind::kFormatting, p.param,
                 "description of '" + p.param + "' could not be parsed");
        }
      }
    }

    for (const PreparedParam& p : api.params) {
      if (!in_signature(p.param)) {
        report(DocBugKind::kSignatureMismatch, p.param,
               "'" + p.param + "' is documented but not in the signature");
      }
      for (const PreparedSentence& s : p.sentences) {
        for (const NormToken& t : s.norm.tokens) {
          if (t.kind != TokenKind::kParam) continue;
          for (const auto& occ : t.payload) {
            if (occ.empty() || in_signature(occ[0]) || dependency_sources.count(occ[0])) continue;
            report(DocBugKind::kSignatureMismatch, occ[0],
                   "description of '" + p.param + "' mentions '" + occ[0] +
                       "', which is not in the signature");
          }
        }
      }
    }
  }
  return bugs;
}

}  // namespace paramspec

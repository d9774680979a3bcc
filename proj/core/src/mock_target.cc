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

#include "paramspec/mock_target.h"

#include <algorithm>

#include "paramspec/io.h"
#include "paramspec/validate.h"

namespace paramspec {

namespace {

constexpr std::string_view kTruth = R"({"apis": {
  "mock.identity": {
    "params": [{"name": "x", "optional": false, "default": null}],
    "constraints": {"x": {"structure": ["tensor"]}}
  },
  "mock.io.decode_raw": {
    "params": [{"name": "input_bytes", "optional": false, "default": null},
               {"name": "byte_order", "optional": false, "default": null},
               {"name": "name", "optional": true, "default": "None"}],
    "constraints": {
      "input_bytes": {"dtype": ["string"], "structure": ["tensor"]},
      "byte_order": {"dtype": ["string"], "enum": ["big", "little"]},
      "name": {}
    }
  },
  "mock.math.segment_reduce": {
    "params": [{"name": "data", "optional": false, "default": null},
               {"name": "segment_ids", "optional": false, "default": null},
               {"name": "num_segments", "optional": false, "default": null},
               {"name": "reduction", "optional": true, "default": "'sum'"},
               {"name": "name", "optional": true, "default": "None"}],
    "constraints": {
      "data": {"dtype": ["float32", "float64"], "structure": ["tensor"]},
      "segment_ids": {"dtype": ["int32", "int64"], "structure": ["tensor"], "ndim": [1],
                      "range": [">= 0"]},
      "num_segments": {"dtype": ["int32"], "structure": ["tensor"], "ndim": [0],
                       "range": [">= 0"]},
      "reduction": {"dtype": ["string"], "enum": ["mean", "sum"]},
      "name": {}
    }
  },
  "mock.nn.embedding_lookup": {
    "params": [{"name": "params", "optional": false, "default": null},
               {"name": "ids", "optional": false, "default": null},
               {"name": "max_norm", "optional": true, "default": "None"},
               {"name": "name", "optional": true, "default": "None"}],
    "constraints": {
      "params": {"dtype": ["float32"], "structure": ["tensor"], "ndim": [2]},
      "ids": {"dtype": ["int32", "int64"], "structure": ["tensor"], "range": [">= 0"]},
      "max_norm": {"dtype": ["float"], "range": ["> 0"]},
      "name": {}
    }
  },
  "mock.nn.max_pool3d": {
    "params": [{"name": "input", "optional": false, "default": null},
               {"name": "ksize", "optional": false, "default": null},
               {"name": "strides", "optional": false, "default": null},
               {"name": "padding", "optional": false, "default": null},
               {"name": "data_format", "optional": true, "default": "'NDHWC'"},
               {"name": "name", "optional": true, "default": "None"}],
    "constraints": {
      "input": {"dtype": ["float16", "float32", "float64"], "structure": ["tensor"], "ndim": [5]},
      "ksize": {"dtype": ["int"], "structure": ["list"]},
      "strides": {"dtype": ["int"], "structure": ["list"]},
      "padding": {"dtype": ["string"], "enum": ["SAME", "VALID"]},
      "data_format": {"dtype": ["string"], "enum": ["NCDHW", "NDHWC"]},
      "name": {}
    }
  },
  "mock.signal.frame": {
    "params": [{"name": "signal", "optional": false, "default": null},
               {"name": "frame_length", "optional": false, "default": null},
               {"name": "frame_step", "optional": false, "default": null},
               {"name": "pad_end", "optional": true, "default": "False"},
               {"name": "name", "optional": true, "default": "None"}],
    "constraints": {
      "signal": {"dtype": ["float32"], "structure": ["tensor"],
                 "shape": ["[batch_size,signal_length]"]},
      "frame_length": {"dtype": ["int32"], "structure": ["tensor"], "ndim": [0],
                       "range": ["> 0"]},
      "frame_step": {"dtype": ["int32"], "structure": ["tensor"], "ndim": [0],
                     "range": [">= 0"]},
      "pad_end": {"dtype": ["bool"]},
      "name": {}
    }
  },
  "mock.sparse.unravel_index": {
    "params": [{"name": "indices", "optional": false, "default": null},
               {"name": "dims", "optional": false, "default": null},
               {"name": "name", "optional": true, "default": "None"}],
    "constraints": {
      "indices": {"dtype": ["int32", "int64"], "structure": ["tensor"]},
      "dims": {"dtype": ["&indices.dtype"], "structure": ["tensor"], "ndim": [1],
               "range": [">= 0"]},
      "name": {}
    }
  }
}})";

bool AnyElement(const ValueSpec* v, bool (*pred)(const Element&)) {
  if (v == nullptr || v->IsNone()) return false;
  int64_t n = v->Numel();
  for (int64_t i = 0; i < n; ++i) {
    if (pred(v->At(i))) return true;
  }
  return false;
}

bool IsZero(const Element& e) {
  if (const int64_t* i = std::get_if<int64_t>(&e)) return *i == 0;
  if (const double* d = std::get_if<double>(&e)) return *d == 0;
  return false;
}

bool IsEmptyString(const Element& e) {
  const std::string* s = std::get_if<std::string>(&e);
  return s != nullptr && s->empty();
}

std::string Text(const ValueSpec* v) {
  if (v == nullptr || v->IsNone() || v->Numel() != 1) return "";
  return ElementText(v->At(0));
}

MockResult Bug(Fault f, std::string id) {
  MockResult r;
  r.fault = f;
  r.bug_id = id;
  r.message = "injected fault " + id;
  return r;
}

}  // namespace

const ConstraintSet& MockTruth() {
  static const ConstraintSet kSet = ConstraintsFromJson(ParseJson(kTruth, "mock truth"));
  return kSet;
}

std::vector<std::string> MockApis() {
  std::vector<std::string> out;
  for (const auto& [name, api] : MockTruth()) out.push_back(name);
  return out;
}

std::vector<std::string> MockBugIds() {
  return {"decode_raw.empty_big_endian",  "embedding_lookup.empty_table",
          "frame.zero_step",              "max_pool3d.zero_ksize",
          "segment_reduce.mean_of_empty", "unravel_index.zero_dim"};
}

MockResult RunMock(const GeneratedInput& input) {
  const std::string& api = input.api;
  if (api.rfind("mock.fault.", 0) == 0) {
    std::string kind = api.substr(11);
    if (kind == "segv") return Bug(Fault::kSegv, "fault.segv");
    if (kind == "fpe") return Bug(Fault::kFpe, "fault.fpe");
    if (kind == "abort") return Bug(Fault::kAbort, "fault.abort");
    if (kind == "bus") return Bug(Fault::kBus, "fault.bus");
    if (kind == "hang") return Bug(Fault::kHang, "fault.hang");
    if (kind == "slow") return Bug(Fault::kSlow, "fault.slow");
    if (kind == "exit3") return Bug(Fault::kExit3, "fault.exit3");
  }
  auto it = MockTruth().find(api);
  if (it == MockTruth().end()) {
    return MockResult{false, "UNKNOWN_API: " + api, Fault::kNone, ""};
  }
  Verdicts verdicts = Validate(input, it->second);
  for (const auto& [param, v] : verdicts) {
    if (v.Conforms()) continue;
    std::string what;
    for (Category c : v.violations) what += (what.empty() ? "" : ",") + std::string(CategoryName(c));
    for (Category c : v.unresolved) what += (what.empty() ? "" : ",") + std::string(CategoryName(c));
    return MockResult{false, "InvalidArgument: " + param + " (" + what + ")", Fault::kNone, ""};
  }
  auto find = [&](const char* name) { return input.Find(name); };
  if (api == "mock.nn.max_pool3d") {
    // output size divides by every window extent
    if (AnyElement(find("ksize"), IsZero)) return Bug(Fault::kFpe, "max_pool3d.zero_ksize");
  } else if (api == "mock.sparse.unravel_index") {
    if (AnyElement(find("dims"), IsZero)) return Bug(Fault::kFpe, "unravel_index.zero_dim");
  } else if (api == "mock.nn.embedding_lookup") {
    const ValueSpec* params = find("params");
    const ValueSpec* ids = find("ids");
    if (params->shape[0] == 0 && ids->Numel() > 0) {
      return Bug(Fault::kSegv, "embedding_lookup.empty_table");
    }
  } else if (api == "mock.math.segment_reduce") {
    const ValueSpec* reduction = find("reduction");
    if (reduction != nullptr && Text(reduction) == "mean" && Text(find("num_segments")) == "0") {
      return Bug(Fault::kAbort, "segment_reduce.mean_of_empty");
    }
  } else if (api == "mock.io.decode_raw") {
    if (Text(find("byte_order")) == "big" && AnyElement(find("input_bytes"), IsEmptyString)) {
      return Bug(Fault::kBus, "decode_raw.empty_big_endian");
    }
  } else if (api == "mock.signal.frame") {
    if (Text(find("frame_step")) == "0") return Bug(Fault::kHang, "frame.zero_step");
  }
  return MockResult{true, "", Fault::kNone, ""};
}

}  // namespace paramspec

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

// Conformance of a generated input against extracted constraints.

#ifndef PARAMSPEC_VALIDATE_H_
#define PARAMSPEC_VALIDATE_H_

#include <map>
#include <set>
#include <string>

#include "paramspec/constraints.h"
#include "paramspec/value.h"

namespace paramspec {

struct ParamVerdict {
  std::set<Category> violations;
  // Categories whose dependency reference could not be resolved against the
  // same input (referenced parameter absent or None).
  std::set<Category> unresolved;

  bool Conforms() const { return violations.empty() && unresolved.empty(); }
};

using Verdicts = std::map<std::string, ParamVerdict>;

// One verdict per signature parameter. Absent optional parameters conform.
// None conforms iff the default is None or the parameter is unconstrained.
// Free shape symbols are not checked; fill descriptors are checked through
// their bounds.
Verdicts Validate(const GeneratedInput& input, const ApiConstraints& api);
ParamVerdict ValidateParam(const std::string& name, const GeneratedInput& input,
                           const ApiConstraints& api);

bool AllConform(const Verdicts& v);
std::set<std::string> NonConforming(const Verdicts& v);

// Text used to compare an element against enum literals.
std::string ElementText(const Element& e);

}  // namespace paramspec

#endif  // PARAMSPEC_VALIDATE_H_

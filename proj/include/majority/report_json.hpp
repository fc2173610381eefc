// Copyright 2026 The Majority Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings of the reports. Keys keep insertion order and every rational
// is a "p/q" string in lowest terms.

#pragma once

#include "json.hpp"
#include "majority/oracle.hpp"
#include "majority/solver.hpp"
#include "majority/verifier.hpp"

namespace majority {

using Json = nlohmann::ordered_json;

Json to_json(const SolveReport& report);
Json to_json(const VerifyReport& report, const Rational& eta);
Json to_json(const OracleResult& result);

}  // namespace majority

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

#include "majority/report_json.hpp"

#include "majority/formats.hpp"

namespace majority {

namespace {

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_pq(v));
  return out;
}

}  // namespace

Json to_json(const SolveReport& report) {
  Json j;
  j["k"] = report.k;
  j["eta_bound"] = to_pq(report.eta_bound);
  j["achieved_eta"] = to_pq(report.achieved_eta);
  j["per_vertex_f"] = rationals(report.per_vertex_f);
  j["recolour_steps"] = report.recolour_steps;
  j["components"] = report.component_sizes;
  if (report.potential_trace) {
    Json traces = Json::array();
    for (const auto& trace : *report.potential_trace) traces.push_back(rationals(trace.potentials));
    j["potential_trace"] = std::move(traces);
  }
  return j;
}

Json to_json(const VerifyReport& report, const Rational& eta) {
  Json j;
  j["ok"] = report.ok;
  j["eta"] = to_pq(eta);
  j["achieved_eta"] = to_pq(report.achieved_eta);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json entry;
    entry["vertex"] = v.vertex;
    entry["same"] = v.same_count;
    entry["out_degree"] = v.out_degree;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  j["list_violations"] = report.list_violations;
  return j;
}

Json to_json(const OracleResult& result) {
  Json j;
  j["opt"] = to_pq(result.opt);
  j["enumerated"] = result.enumerated;
  j["witness"] = serialize_colouring(result.witness);
  return j;
}

}  // namespace majority

// Copyright 2026 The ucjiqp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UCJIQP_JSON_IO_H
#define UCJIQP_JSON_IO_H

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "ucjiqp/distribution.h"
#include "ucjiqp/iqp.h"
#include "ucjiqp/state_vector.h"
#include "ucjiqp/ucj.h"
#include "ucjiqp/verify.h"

namespace ucjiqp {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point value printed to 17 significant
/// digits, so a parse of the output reproduces the doubles exactly.
std::string dump_json(const Json &j, int indent = 2);

/// Parses text; malformed input raises InputError.
Json parse_json(const std::string &text);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

// {"n": int, "v": [float]*n, "w": [{"a": int, "b": int, "val": float}]}, a < b,
// no duplicate pairs. Errors name the offending field.
IqpCircuit iqp_from_json(const Json &j);
Json iqp_to_json(const IqpCircuit &c);

// {"modes", "reference_n", "givens": [{p, q, theta}], "diagonal": [{p, q, theta}],
//  "global_phase"}. Diagonals are written sorted by (p, q).
Ucj1Compiled ucj_from_json(const Json &j);
Json ucj_to_json(const Ucj1Compiled &c);

Json report_to_json(const VerifyReport &r);
Json distribution_to_json(const Distribution &d);
Json counts_to_json(const std::map<std::string, uint64_t> &counts);
/// Nonzero amplitudes only: {"modes": m, "amplitudes": {"bits": [re, im], ...}}.
Json state_to_json(const StateVector &s);

}  // namespace ucjiqp

#endif

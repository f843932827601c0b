// Copyright 2026 The Enigma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents exchanged by the command-line tools.
//
//   Ising          {"n", "h": [..], "J": [[i, j, v], ..], "offset"}
//   QUBO           {"n", "A": [[i, j, v], ..], "offset"}
//   KeyI           {"scheme": "I", "n", "targets", "tau", "offset"}
//   KeyII          {"scheme": "II", "n", "m", "perm", "key1", "offset"}
//   KeyIII         KeyII fields with "scheme": "III" and "d_star"
//   Distribution   {"n", "counts": {"bits": weight, ..}}
//
// Fields are written in the order above; pair lists are sorted.

#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "enigma/core.hpp"
#include "enigma/enigma1.hpp"
#include "enigma/enigma2.hpp"
#include "enigma/enigma3.hpp"
#include "enigma/outcome.hpp"

namespace enigma {

using Json = nlohmann::ordered_json;

Json to_json(const IsingModel& model);
Json to_json(const QuboModel& model);
Json to_json(const KeyI& key);
Json to_json(const KeyII& key);
Json to_json(const KeyIII& key);
Json to_json(const OutcomeDistribution& dist);

// Readers throw SchemaError for malformed documents.
IsingModel ising_from_json(const Json& doc);
QuboModel qubo_from_json(const Json& doc);
KeyI key1_from_json(const Json& doc);
KeyII key2_from_json(const Json& doc);
KeyIII key3_from_json(const Json& doc);
OutcomeDistribution distribution_from_json(const Json& doc);

using AnyKey = std::variant<KeyI, KeyII, KeyIII>;
/// Dispatches on the "scheme" field.
AnyKey key_from_json(const Json& doc);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& doc);

}  // namespace enigma

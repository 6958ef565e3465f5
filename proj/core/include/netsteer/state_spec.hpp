// Copyright 2026 The netsteer Authors
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

#pragma once

// JSON state specification:
//
//   {"n": 2,
//    "sources": [{"kind": "werner", "p": 0.7},
//                {"kind": "bell_diagonal", "c": [0.5, -0.5, 0.5]},
//                {"kind": "general", "a": [..3], "b": [..3], "C": [[..3], [..3], [..3]]},
//                {"kind": "raw", "rho": [[[re, im], ..4], ..4]}]}
//
// A single source entry together with n > 1 is not expanded; `sources` must
// list exactly n entries.

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "netsteer/states.hpp"

namespace netsteer {

/// Throws ValidationError (or a subclass such as PsdError) on any schema or
/// physicality problem.
StarNetwork parse_state_spec(const nlohmann::json& spec);
StarNetwork parse_state_spec_text(std::string_view text);
StarNetwork load_state_spec(const std::filesystem::path& path);

nlohmann::json source_to_json(const TwoQubitSource& source);
nlohmann::json network_to_json(const StarNetwork& network);

}  // namespace netsteer

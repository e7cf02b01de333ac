// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

// JSON and CSV formats for every value the library exchanges.
//
// Output is deterministic: object keys are sorted and floats are written
// with 17 significant digits. Non-finite floats are written as the strings
// "inf", "-inf" and "nan".

#pragma once

#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "fractal.hpp"
#include "symbolic.hpp"
#include "systems.hpp"

namespace liyorke {

using Json = nlohmann::json;

std::string format_double(double x);

/// Canonical text of a JSON value, indented by two spaces, newline-terminated.
std::string dump_canonical(const Json& value);

/// Throws Parse on malformed text.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

Json to_json(const SymbolSequence& seq);
SymbolSequence sequence_from_json(const Json& j);

Json to_json(const GapSequence& gaps);
GapSequence gaps_from_json(const Json& j);
/// zero | constant:c | linear | quadratic | affine:a,b | list:FILE, where FILE
/// holds a JSON array or whitespace-separated integers.
GapSequence parse_gap_rule(const std::string& text);

Json to_json(const PairSchedule& schedule);
Json to_json(const GapReport& report);

Json to_json(const IfsSystem& ifs);
IfsSystem ifs_from_json(const Json& j);

Json to_json(const SystemSpec& spec);
SystemSpec system_from_json(const Json& j);

Json to_json(const MoranSolution& solution);
Json to_json(const ConjugacyReport& report);

Json to_json(const PointCloud& cloud);
std::string cloud_to_csv(const PointCloud& cloud);

Json to_json(const BoxCountEstimate& estimate);
/// Two columns: -log eps, log N.
std::string estimate_to_csv(const BoxCountEstimate& estimate);

Json to_json(const LiYorkeProfile& profile);
Json to_json(const LiYorkeVerdict& verdict);

}  // namespace liyorke

// Copyright 2026 The Blockade Authors
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

#pragma once

#include <iosfwd>
#include <string>

#include "blockade/sweep.hpp"

namespace blockade {

inline constexpr const char* kUndefinedMarker = "undefined";

/// One header row, then one row per grid point. Numbers use 12 significant
/// digits; missing values are written as "undefined".
void write_csv(std::ostream& out, const SweepResult& result);
void write_csv(const std::string& path, const SweepResult& result);

/// Inverse of write_csv (metadata is not part of the CSV).
SweepResult read_csv(std::istream& in);
SweepResult read_csv(const std::string& path);

std::string format_number(double v);

}  // namespace blockade

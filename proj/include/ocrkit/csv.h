// Copyright 2026 The ocrkit Authors
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

#include <string>
#include <string_view>
#include <vector>

namespace ocrkit {

// Minimal RFC 4180 helpers: fields with commas, quotes or line breaks are
// quoted; rows end with '\n'.
std::string CsvRow(const std::vector<std::string>& fields);

// Lines starting with '#' outside quotes are skipped.
std::vector<std::vector<std::string>> ParseCsv(std::string_view text);

// Fixed-point text with `decimals` digits, rounded half-up.
std::string FormatFixed(double value, int decimals);

// Half-up rounding to `decimals` places, tolerant of binary representation
// error (13.15 rounds to 13.2).
double RoundHalfUp(double value, int decimals);

}  // namespace ocrkit

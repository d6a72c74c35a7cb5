/*
 * Copyright 2026 The fourd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOURD_TEXT_H_
#define FOURD_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Locale-independent helpers shared by the text formats.
namespace fourd::text {

std::string_view Trim(std::string_view s);

std::vector<std::string_view> Split(std::string_view s, char delimiter);

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> Lines(std::string_view s);

// Whole-field decimal parse; rejects empty fields, trailing garbage and
// non-finite values.
std::optional<double> ParseNumber(std::string_view s);

// `digits` significant digits in %g style, or the shortest round-trip form
// when digits <= 0. Negative zero prints as "0".
std::string FormatNumber(double value, int digits);

}  // namespace fourd::text

#endif  // FOURD_TEXT_H_

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

#ifndef FOURD_DATASET_IO_H_
#define FOURD_DATASET_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fourd/strapdown.h"

namespace fourd {

// IMU dataset CSV: a header naming the ten columns
//
//   t,ax,ay,az,wx,wy,wz,bx,by,bz
//
// followed by one row per sample (s, m/s^2, rad/s, uT). Lines starting
// with '#' and blank lines are ignored.
inline constexpr std::string_view kDatasetHeader = "t,ax,ay,az,wx,wy,wz,bx,by,bz";

// Throws kColumnCountMismatch, kParseError, or kNonMonotonicTime, each with
// the 1-based line number. A header without rows yields an empty vector.
std::vector<ImuSample> ParseDataset(std::string_view content);

// Shortest round-trip number formatting, so parsing gives back the exact
// doubles.
std::string SerializeDataset(std::span<const ImuSample> samples);

// Whole-file helpers; failures throw kIoError.
std::string ReadFile(const std::string& path);
// Writes to a sibling temporary file, then renames it over `path`.
void WriteFileAtomic(const std::string& path, std::string_view content);

}  // namespace fourd

#endif  // FOURD_DATASET_IO_H_

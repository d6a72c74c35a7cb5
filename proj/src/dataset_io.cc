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

#include "fourd/dataset_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fourd/errors.h"
#include "fourd/text.h"

namespace fourd {
namespace {

constexpr size_t kDatasetColumns = 10;

}  // namespace

std::vector<ImuSample> ParseDataset(std::string_view content) {
  static const std::vector<std::string_view> kNames =
      text::Split(kDatasetHeader, ',');
  std::vector<ImuSample> samples;
  bool header_seen = false;
  int line_number = 0;
  for (std::string_view line : text::Lines(content)) {
    ++line_number;
    const std::string_view trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text::Split(trimmed, ',');
    if (fields.size() != kDatasetColumns) {
      throw Error(ErrorCode::kColumnCountMismatch,
                  "expected 10 columns, found " + std::to_string(fields.size()),
                  line_number);
    }
    if (!header_seen) {
      for (size_t i = 0; i < kDatasetColumns; ++i) {
        if (text::Trim(fields[i]) != kNames[i]) {
          throw Error(ErrorCode::kParseError,
                      "header column " + std::to_string(i + 1) + " must be '" +
                          std::string(kNames[i]) + "'",
                      line_number);
        }
      }
      header_seen = true;
      continue;
    }
    double v[kDatasetColumns];
    for (size_t i = 0; i < kDatasetColumns; ++i) {
      const auto parsed = text::ParseNumber(fields[i]);
      if (!parsed) {
        throw Error(ErrorCode::kParseError,
                    "invalid number '" + std::string(text::Trim(fields[i])) +
                        "' in column '" + std::string(kNames[i]) + "'",
                    line_number);
      }
      v[i] = *parsed;
    }
    ImuSample s;
    s.t = v[0];
    s.accel = Vec3(v[1], v[2], v[3]);
    s.gyro = Vec3(v[4], v[5], v[6]);
    s.mag = Vec3(v[7], v[8], v[9]);
    if (!samples.empty() && !(s.t > samples.back().t)) {
      throw Error(ErrorCode::kNonMonotonicTime,
                  "timestamp does not increase", line_number, s.t);
    }
    samples.push_back(s);
  }
  if (!header_seen) {
    throw Error(ErrorCode::kParseError, "missing dataset header");
  }
  return samples;
}

std::string SerializeDataset(std::span<const ImuSample> samples) {
  std::ostringstream out;
  out << kDatasetHeader << '\n';
  for (const ImuSample& s : samples) {
    out << text::FormatNumber(s.t, 0);
    for (const Vec3* v : {&s.accel, &s.gyro, &s.mag}) {
      for (int i = 0; i < 3; ++i) out << ',' << text::FormatNumber((*v)[i], 0);
    }
    out << '\n';
  }
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read '" + path + "'");
  return buffer.str();
}

void WriteFileAtomic(const std::string& path, std::string_view content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot create '" + temp + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::remove(temp.c_str());
      throw Error(ErrorCode::kIoError, "cannot write '" + temp + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::remove(temp.c_str());
    throw Error(ErrorCode::kIoError,
                "cannot rename '" + temp + "' to '" + path + "': " + ec.message());
  }
}

}  // namespace fourd

//
// Copyright 2026 The GFDP Authors
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
//

#ifndef GFDP_IO_H_
#define GFDP_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace gfdp {

// Shortest decimal string that round-trips to the same binary64 value.
// Output is locale-independent, which keeps emitted files byte-stable.
std::string FormatDouble(double value);

// Reads one real per line. Blank lines are skipped, and a first line equal to
// `header` (when non-empty) is treated as a column header.
std::vector<double> ReadColumn(std::istream& in, std::string_view header);
std::vector<double> ReadColumnFile(const std::filesystem::path& path,
                                   std::string_view header);

// Row-major CSV preceded by a single `n=<rows>` line.
void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXd& matrix);
Eigen::MatrixXd ReadMatrixCsv(std::istream& in);

// Binary container: magic "GFDP", u32 version, u64 rows, u64 cols, then
// rows*cols binary64 values in row-major order. All integers and values are
// little-endian.
inline constexpr char kBinaryMagic[4] = {'G', 'F', 'D', 'P'};
inline constexpr std::uint32_t kBinaryVersion = 1;

void WriteMatrixBinary(std::ostream& out, const Eigen::MatrixXd& matrix);
Eigen::MatrixXd ReadMatrixBinary(std::istream& in);

}  // namespace gfdp

#endif  // GFDP_IO_H_

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

#include "gfdp/io.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gfdp/errors.h"

namespace gfdp {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double ParseDouble(std::string_view token) {
  token = Trim(token);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError("not a real number: '" + std::string(token) + "'");
  }
  return value;
}

template <typename T>
void PutLittleEndian(std::ostream& out, T value) {
  static_assert(std::endian::native == std::endian::little,
                "binary container assumes a little-endian host");
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  out.write(bytes, sizeof(T));
}

template <typename T>
T GetLittleEndian(std::istream& in) {
  char bytes[sizeof(T)];
  if (!in.read(bytes, sizeof(T))) {
    throw ParameterError("truncated binary matrix container");
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw NumericError("cannot format value");
  return std::string(buffer, ptr);
}

std::vector<double> ReadColumn(std::istream& in, std::string_view header) {
  std::vector<double> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string_view token = Trim(line);
    if (token.empty()) continue;
    if (first && !header.empty() && token == header) {
      first = false;
      continue;
    }
    first = false;
    values.push_back(ParseDouble(token));
  }
  return values;
}

std::vector<double> ReadColumnFile(const std::filesystem::path& path,
                                   std::string_view header) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path.string());
  return ReadColumn(in, header);
}

void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXd& matrix) {
  out << "n=" << matrix.rows() << '\n';
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(matrix(i, j));
    }
    out << '\n';
  }
}

Eigen::MatrixXd ReadMatrixCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || Trim(line).substr(0, 2) != "n=") {
    throw ParameterError("matrix CSV must start with an 'n=<rows>' line");
  }
  const double declared = ParseDouble(Trim(line).substr(2));
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(ParseDouble(cell));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParameterError("ragged matrix CSV");
    }
    rows.push_back(std::move(row));
  }
  if (declared != static_cast<double>(rows.size())) {
    throw ParameterError("matrix CSV row count does not match its header");
  }
  const Eigen::Index cols = rows.empty() ? 0 : rows.front().size();
  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(rows.size()), cols);
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) matrix(i, j) = rows[i][j];
  }
  return matrix;
}

void WriteMatrixBinary(std::ostream& out, const Eigen::MatrixXd& matrix) {
  out.write(kBinaryMagic, sizeof(kBinaryMagic));
  PutLittleEndian<std::uint32_t>(out, kBinaryVersion);
  PutLittleEndian<std::uint64_t>(out, static_cast<std::uint64_t>(matrix.rows()));
  PutLittleEndian<std::uint64_t>(out, static_cast<std::uint64_t>(matrix.cols()));
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      PutLittleEndian<double>(out, matrix(i, j));
    }
  }
}

Eigen::MatrixXd ReadMatrixBinary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, sizeof(magic)) ||
      !std::equal(magic, magic + 4, kBinaryMagic)) {
    throw ParameterError("missing GFDP magic");
  }
  const auto version = GetLittleEndian<std::uint32_t>(in);
  if (version != kBinaryVersion) {
    throw ParameterError("unsupported GFDP version " + std::to_string(version));
  }
  const auto rows = GetLittleEndian<std::uint64_t>(in);
  const auto cols = GetLittleEndian<std::uint64_t>(in);
  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(rows),
                         static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      matrix(i, j) = GetLittleEndian<double>(in);
    }
  }
  return matrix;
}

}  // namespace gfdp

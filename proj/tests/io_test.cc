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

#include <cmath>
#include <cstring>
#include <sstream>

#include <gtest/gtest.h>

#include "gfdp/errors.h"

namespace gfdp {
namespace {

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(2.0), "2");
  for (double v : {1.0 / 3.0, -7.49363839780877e-300, 1e22, 5e-324}) {
    EXPECT_EQ(std::strtod(FormatDouble(v).c_str(), nullptr), v);
  }
}

TEST(ReadColumnTest, OptionalHeaderAndBlankLines) {
  std::istringstream with_header("f\n1\n-2.5\n\n3e-1\n");
  EXPECT_EQ(ReadColumn(with_header, "f"), (std::vector<double>{1.0, -2.5, 0.3}));
  std::istringstream bare("4\n5\n");
  EXPECT_EQ(ReadColumn(bare, "f"), (std::vector<double>{4.0, 5.0}));
  std::istringstream junk("1\nabc\n");
  EXPECT_THROW(ReadColumn(junk, "f"), ParameterError);
}

TEST(MatrixCsvTest, RoundTrip) {
  Eigen::MatrixXd m(2, 3);
  m << 1.0, -0.1, 1.0 / 3.0, 0.0, 1e-17, 4.0;
  std::stringstream buffer;
  WriteMatrixCsv(buffer, m);
  EXPECT_EQ(buffer.str().rfind("n=2\n", 0), 0u);
  EXPECT_EQ(ReadMatrixCsv(buffer), m);
}

TEST(MatrixCsvTest, RowCountMustMatchHeader) {
  std::istringstream bad("n=3\n1,2\n3,4\n");
  EXPECT_THROW(ReadMatrixCsv(bad), ParameterError);
}

TEST(MatrixBinaryTest, RoundTripAndLayout) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 2.0, 3.0, std::nextafter(1.0, 2.0);
  std::stringstream buffer;
  WriteMatrixBinary(buffer, m);
  const std::string bytes = buffer.str();
  ASSERT_EQ(bytes.size(), 4u + 4u + 8u + 8u + 4u * 8u);
  EXPECT_EQ(bytes.substr(0, 4), "GFDP");
  EXPECT_EQ(bytes[4], 1);
  double second = 0.0;
  std::memcpy(&second, bytes.data() + 24 + 8, sizeof(double));
  EXPECT_EQ(second, 2.0);  // row-major
  EXPECT_EQ(ReadMatrixBinary(buffer), m);
}

TEST(MatrixBinaryTest, RejectsBadMagicAndTruncation) {
  std::istringstream bad("NOPE0000");
  EXPECT_THROW(ReadMatrixBinary(bad), ParameterError);
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(3, 3);
  std::stringstream buffer;
  WriteMatrixBinary(buffer, m);
  std::string bytes = buffer.str();
  bytes.resize(bytes.size() - 5);
  std::istringstream truncated(bytes);
  EXPECT_THROW(ReadMatrixBinary(truncated), ParameterError);
}

}  // namespace
}  // namespace gfdp

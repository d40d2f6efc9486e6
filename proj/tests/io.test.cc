// Copyright 2026 The scatmet Authors
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

#include "scatmet/io.h"

#include <sstream>

#include "gtest/gtest.h"
#include "scatmet/netbuild.h"

using namespace scatmet;

TEST(io, matrix_json_round_trip) {
    const ComplexMatrix y = symmetric_unitary(8, 0.37);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(y));
    EXPECT_EQ(back.rows(), 8);
    EXPECT_EQ(max_abs_diff(y, back), 0.0);
}

TEST(io, matrix_json_real_rows) {
    const ComplexMatrix m = matrix_from_json("[[1, 2], [3, 4.5]]");
    ASSERT_EQ(m.rows(), 2);
    EXPECT_EQ(m(1, 1), std::complex<double>(4.5, 0));
    EXPECT_EQ(m(0, 1), std::complex<double>(2, 0));
}

TEST(io, significant_digits) {
    EXPECT_EQ(format_sig(8.0 / 3), "2.66666667");
    EXPECT_EQ(format_sig(4.0), "4");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(io, csv_rows) {
    std::ostringstream os;
    {
        CsvWriter w(os, {"a", "b", "c"});
        w.cell(1LL).cell(0.5).cell(std::string("x"));
        w.end_row();
        w.empty().cell(2LL).empty();
        w.end_row();
    }
    EXPECT_EQ(os.str(), "a,b,c\n1,0.5,x\n,2,\n");
}

TEST(io, sha256_known_vectors) {
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

// Copyright 2026 The dqc1-correlations Authors
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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

#include "dqc1/io.hpp"
#include "dqc1/randomness.hpp"
#include "test_util.hpp"

namespace dqc1 {
namespace {

TEST(FormatDouble, SeventeenDigits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(1.0), "1");
    for (double x : {-2.5e-300, 1.0 / 3.0, 6.02214076e23}) {
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
}

TEST(Cmat, RoundTripIsExact) {
    std::mt19937_64 rng(1);
    const Matrix m = testing::gaussian_matrix(3, 5, rng);
    std::stringstream ss;
    write_cmat(ss, m);
    const Matrix back = read_cmat(ss);
    ASSERT_EQ(back.rows(), 3);
    ASSERT_EQ(back.cols(), 5);
    EXPECT_EQ(back, m);
}

TEST(Cmat, HeaderAndLayout) {
    Matrix m(1, 2);
    m << Complex(1.0, -0.5), Complex(0.0, 2.0);
    std::stringstream ss;
    write_cmat(ss, m);
    EXPECT_EQ(ss.str(), "CMAT v1 1 2\n1 -0.5\n0 2\n");
}

TEST(Cmat, Malformed) {
    for (const char *text : {"", "CMAT v2 1 1\n0 0\n", "CMAT v1 2 1\n0 0\n", "CMAT v1 1 1\n0 x\n",
                             "CMAT v1 1 1\n0 0\n7 7\n", "CMAT v1 0 1\n"}) {
        std::istringstream in(text);
        EXPECT_THROW(read_cmat(in), FormatError) << text;
    }
}

TEST(CircuitFile, RoundTrip) {
    const Circuit c = random_two_qubit_circuit(5, 7, SeedSpec{2, 0});
    std::stringstream ss;
    write_circuit(ss, c);
    const Circuit back = read_circuit(ss, 5);
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        EXPECT_EQ(back.gates()[k].q1, c.gates()[k].q1);
        EXPECT_EQ(back.gates()[k].q2, c.gates()[k].q2);
        EXPECT_EQ(back.gates()[k].matrix, c.gates()[k].matrix);
    }
}

TEST(CircuitFile, CommentsAndInferredSize) {
    std::string line = "0 3";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            line += r == c ? " 1 0" : " 0 0";
        }
    }
    std::istringstream in("# identity on 0,3\n\n" + line + "\n");
    const Circuit c = read_circuit(in);
    EXPECT_EQ(c.num_qubits(), 4);
    EXPECT_EQ(c.size(), 1u);
}

TEST(CircuitFile, Malformed) {
    std::istringstream short_line("0 1 1 0 0 0\n");
    EXPECT_THROW(read_circuit(short_line), FormatError);
    std::string bad = "0 1";
    for (int k = 0; k < 16; ++k) {
        bad += " 2 0"; // not unitary
    }
    std::istringstream non_unitary(bad + "\n");
    EXPECT_THROW(read_circuit(non_unitary), FormatError);
    std::string wide = "0 5";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            wide += r == c ? " 1 0" : " 0 0";
        }
    }
    std::istringstream too_wide(wide + "\n");
    EXPECT_THROW(read_circuit(too_wide, 3), FormatError);
}

} // namespace
} // namespace dqc1

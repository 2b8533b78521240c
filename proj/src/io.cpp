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

#include "dqc1/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace dqc1 {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_cmat(std::ostream &out, const Matrix &m) {
    out << "CMAT v1 " << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << format_double(m(r, c).real()) << ' ' << format_double(m(r, c).imag()) << '\n';
        }
    }
}

Matrix read_cmat(std::istream &in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw FormatError("CMAT: missing header line");
    }
    std::istringstream hs(header);
    std::string magic;
    std::string version;
    long long rows = -1;
    long long cols = -1;
    std::string trailing;
    if (!(hs >> magic >> version >> rows >> cols) || magic != "CMAT" || version != "v1" ||
        (hs >> trailing)) {
        throw FormatError("CMAT: header must be `CMAT v1 <rows> <cols>`");
    }
    if (rows < 1 || cols < 1 || rows * cols > (1LL << 28)) {
        throw FormatError("CMAT: invalid shape");
    }
    Matrix m(rows, cols);
    std::string line;
    for (long long k = 0; k < rows * cols; ++k) {
        if (!std::getline(in, line)) {
            throw FormatError("CMAT: expected " + std::to_string(rows * cols) + " entries, got " +
                              std::to_string(k));
        }
        std::istringstream ls(line);
        double re = 0.0;
        double im = 0.0;
        if (!(ls >> re >> im) || (ls >> trailing)) {
            throw FormatError("CMAT: malformed entry on line " + std::to_string(k + 2));
        }
        m(k / cols, k % cols) = Complex{re, im};
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw FormatError("CMAT: trailing data after the declared entries");
        }
    }
    return m;
}

void write_circuit(std::ostream &out, const Circuit &circuit) {
    for (const auto &g : circuit.gates()) {
        out << g.q1 << ' ' << g.q2;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                out << ' ' << format_double(g.matrix(r, c).real()) << ' '
                    << format_double(g.matrix(r, c).imag());
            }
        }
        out << '\n';
    }
}

Circuit read_circuit(std::istream &in, std::optional<int> num_qubits) {
    struct Parsed {
        int q1;
        int q2;
        Gate4 m;
    };
    std::vector<Parsed> gates;
    std::string line;
    int line_no = 0;
    int max_target = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        Parsed p{0, 0, Gate4::Zero()};
        if (!(ls >> p.q1 >> p.q2)) {
            throw FormatError("circuit: line " + std::to_string(line_no) + ": expected `q1 q2`");
        }
        for (int e = 0; e < 16; ++e) {
            double re = 0.0;
            double im = 0.0;
            if (!(ls >> re >> im)) {
                throw FormatError("circuit: line " + std::to_string(line_no) +
                                  ": expected 16 `re im` pairs");
            }
            p.m(e / 4, e % 4) = Complex{re, im};
        }
        std::string trailing;
        if (ls >> trailing) {
            throw FormatError("circuit: line " + std::to_string(line_no) + ": trailing data");
        }
        if (p.q1 < 0 || p.q2 < 0) {
            throw FormatError("circuit: line " + std::to_string(line_no) + ": negative target");
        }
        max_target = std::max({max_target, p.q1, p.q2});
        gates.push_back(p);
    }
    const int n = num_qubits.value_or(std::max(max_target + 1, 2));
    if (max_target >= n) {
        throw FormatError("circuit: target " + std::to_string(max_target) +
                          " outside a register of " + std::to_string(n) + " qubits");
    }
    Circuit circuit(n);
    for (const auto &p : gates) {
        try {
            circuit.add_gate(p.m, p.q1, p.q2);
        } catch (const DimensionError &e) {
            throw FormatError(std::string("circuit: ") + e.what());
        }
    }
    return circuit;
}

} // namespace dqc1

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

#include "dqc1/randomness.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>

#include "dqc1/tensor_core.hpp"

namespace dqc1 {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Matrix haar_matrix(int dim, Rng &rng) {
    if (dim < 2) {
        throw DimensionError("haar_unitary: dim must be >= 2");
    }
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
    Matrix z(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = Complex{re, im};
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix &r = qr.matrixQR();
    // Q diag(R_kk / |R_kk|) makes R's diagonal real positive
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Complex d = r(k, k);
        const double mag = std::abs(d);
        q.col(k) *= mag > 0.0 ? d / mag : Complex{1.0};
    }
    return q;
}

Matrix haar_matrix(int dim, const SeedSpec &seed) {
    Rng rng = make_rng(seed);
    return haar_matrix(dim, rng);
}

DenseOperator haar_unitary(std::size_t dim, const SeedSpec &seed) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw DimensionError("haar_unitary: register dimension must be a power of two >= 2");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return {n, haar_matrix(static_cast<int>(dim), seed)};
}

Vector haar_state_vector(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[k] = Complex{re, im};
    }
    v.normalize();
    return v;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 2) {
        throw DimensionError("Circuit: need at least 2 qubits for two-qubit gates");
    }
}

void Circuit::add_gate(const Gate4 &matrix, int q1, int q2) {
    if (q1 == q2 || q1 < 0 || q2 < 0 || q1 >= num_qubits_ || q2 >= num_qubits_) {
        throw DimensionError("Circuit: invalid targets (" + std::to_string(q1) + ", " +
                             std::to_string(q2) + ")");
    }
    const Gate4 gram = matrix.adjoint() * matrix;
    if ((gram - Gate4::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
        throw DimensionError("Circuit: gate is not unitary");
    }
    gates_.push_back({matrix, q1, q2});
}

Circuit Circuit::adjoint() const {
    Circuit out(num_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back({it->matrix.adjoint(), it->q1, it->q2});
    }
    return out;
}

Circuit random_two_qubit_circuit(int n, int gate_count, const SeedSpec &seed) {
    if (n < 2) {
        throw DimensionError("random_two_qubit_circuit: n must be >= 2");
    }
    if (gate_count < 1) {
        throw DimensionError("random_two_qubit_circuit: gate_count must be >= 1");
    }
    Rng rng = make_rng(seed);
    const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> pick(0, pairs - 1);
    Circuit circuit(n);
    for (int g = 0; g < gate_count; ++g) {
        // unrank the pair index into (a, b) with a < b
        std::uint64_t rank = pick(rng);
        int a = 0;
        while (rank >= static_cast<std::uint64_t>(n - 1 - a)) {
            rank -= static_cast<std::uint64_t>(n - 1 - a);
            ++a;
        }
        const int b = a + 1 + static_cast<int>(rank);
        const Gate4 u = haar_matrix(4, rng);
        circuit.add_gate(u, a, b);
    }
    return circuit;
}

Circuit random_product_circuit(int n, const SeedSpec &seed) {
    if (n < 2) {
        throw DimensionError("random_product_circuit: n must be >= 2");
    }
    Rng rng = make_rng(seed);
    std::vector<Eigen::Matrix2cd> singles;
    for (int q = 0; q < n; ++q) {
        singles.emplace_back(haar_matrix(2, rng));
    }
    auto kron = [](const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
        Gate4 out;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                out(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
            }
        }
        return out;
    };
    Circuit circuit(n);
    for (int q = 0; q + 1 < n; q += 2) {
        circuit.add_gate(kron(singles[q], singles[q + 1]), q, q + 1);
    }
    if (n % 2 == 1) {
        circuit.add_gate(kron(Eigen::Matrix2cd::Identity(), singles[n - 1]), n - 2, n - 1);
    }
    return circuit;
}

void apply_circuit_inplace(const Circuit &circuit, Vector &amplitudes) {
    if (static_cast<std::size_t>(amplitudes.size()) != dim_of(circuit.num_qubits())) {
        throw DimensionError("apply_circuit: register size mismatch");
    }
    for (const auto &gate : circuit.gates()) {
        apply_two_qubit_gate_inplace(amplitudes, circuit.num_qubits(), gate.matrix, gate.q1,
                                     gate.q2);
    }
}

PureState apply_circuit(const Circuit &circuit, const PureState &state) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw DimensionError("apply_circuit: register size mismatch");
    }
    Vector amps = state.amplitudes();
    apply_circuit_inplace(circuit, amps);
    return {state.num_qubits(), std::move(amps)};
}

DenseOperator circuit_unitary(const Circuit &circuit, int dense_limit) {
    const int n = circuit.num_qubits();
    if (n > dense_limit) {
        throw SizeLimitError("circuit_unitary: " + std::to_string(n) +
                             " qubits exceeds the dense limit of " + std::to_string(dense_limit));
    }
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    Matrix u = Matrix::Identity(dim, dim);
    // column c of U is U|c>; columns are contiguous in Eigen's layout
    for (Eigen::Index c = 0; c < dim; ++c) {
        Vector col = u.col(c);
        apply_circuit_inplace(circuit, col);
        u.col(c) = col;
    }
    return {n, std::move(u)};
}

} // namespace dqc1

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

/**
 * @file
 * Reproducible randomness: seed streams, Haar-random unitaries, random
 * two-qubit circuits, and circuit execution/densification.
 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dqc1/types.hpp"

namespace dqc1 {

inline constexpr int kDefaultDenseLimit = 12;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// A master seed plus a stream id. Each distinct (master, stream) pair
/// owns an independent generator; derive() builds nested streams.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    std::uint64_t child_seed() const { return mix64(master_seed ^ stream_id); }
    SeedSpec derive(std::uint64_t id) const { return {child_seed(), id}; }

    bool operator==(const SeedSpec &) const = default;
};

using Rng = std::mt19937_64;

inline Rng make_rng(const SeedSpec &seed) { return Rng{seed.child_seed()}; }

/// Haar-distributed dim x dim unitary (Ginibre -> QR -> phase fix).
Matrix haar_matrix(int dim, Rng &rng);
Matrix haar_matrix(int dim, const SeedSpec &seed);

/// Haar unitary on a qubit register; dim must be a power of two >= 2.
DenseOperator haar_unitary(std::size_t dim, const SeedSpec &seed);

/// Normalized complex-Gaussian vector (Haar-random pure state).
Vector haar_state_vector(std::size_t dim, Rng &rng);

struct GateSpec {
    Gate4 matrix;
    int q1 = 0;
    int q2 = 1;
};

class Circuit {
  public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateSpec> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    /// Validates targets and unitarity (1e-10).
    void add_gate(const Gate4 &matrix, int q1, int q2);

    /// Reversed order with adjoint gates.
    Circuit adjoint() const;

  private:
    int num_qubits_;
    std::vector<GateSpec> gates_;
};

/// `gate_count` Haar 4x4 gates, each on a uniformly random unordered pair.
/// Pairs are drawn with replacement.
Circuit random_two_qubit_circuit(int n, int gate_count, const SeedSpec &seed);

/// Tensor product of Haar single-qubit gates, encoded as two-qubit gates
/// u_a (x) u_b on disjoint pairs.
Circuit random_product_circuit(int n, const SeedSpec &seed);

void apply_circuit_inplace(const Circuit &circuit, Vector &amplitudes);
PureState apply_circuit(const Circuit &circuit, const PureState &state);

/// Dense product of the embedded gates (rightmost applied first).
DenseOperator circuit_unitary(const Circuit &circuit, int dense_limit = kDefaultDenseLimit);

} // namespace dqc1

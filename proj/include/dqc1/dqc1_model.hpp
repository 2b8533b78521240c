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
 * The one-clean-qubit circuit: final state with top-qubit polarization tau,
 * application of that state to product vectors, reduced operators, and
 * normalized-trace estimation.
 *
 * The register is n qubits; the full system is n + 1 qubits with the top
 * (clean) qubit at index 0. Register qubit k is global qubit k + 1.
 */

#pragma once

#include <cstdint>
#include <variant>

#include "dqc1/randomness.hpp"
#include "dqc1/types.hpp"

namespace dqc1 {

using UnitarySource = std::variant<DenseOperator, Circuit>;

int source_qubits(const UnitarySource &source);

/// U|x> (or U^dagger|x> when `adjoint`) for a register state.
Vector apply_unitary(const UnitarySource &source, const Vector &register_state,
                     bool adjoint = false);

struct Dqc1Config {
    int n = 1;
    double tau = 1.0;
    UnitarySource unitary;

    Dqc1Config(int n_qubits, double polarization, UnitarySource source);
    /// Throws DimensionError on invalid tau or register mismatch.
    void validate() const;
};

/// Basis vector |t, i_A, j_B> of the full register for an active cut.
struct ProductStateIndex {
    int t = 0;
    std::uint64_t i = 0;
    std::uint64_t j = 0;
};

/// (1/2^{n+1}) [[I, tau U^dagger], [tau U, I]].
DenseOperator final_state(const Dqc1Config &config, int dense_limit = kDefaultDenseLimit);

/// Returns the cut with the top qubit on side A (swapping sides if needed).
Bipartition top_on_side_a(const Bipartition &cut);

/// rho |t, i, j> without forming rho: (1/2^{n+1})(|t,i,j> + tau |1-t> U^(dagger)|i,j>).
PureState apply_to_product(const Dqc1Config &config, const Bipartition &cut,
                           const ProductStateIndex &idx);

/// Tr_A |psi_alpha><psi_alpha| acting on the B-side qubits.
DenseOperator sigma_b(const Dqc1Config &config, const Bipartition &cut,
                      const ProductStateIndex &idx, int dense_limit = kDefaultDenseLimit);

/// Tr_A[U |i,j><i,j| U^dagger] for a cut of the n register qubits.
DenseOperator q_operator(const UnitarySource &unitary, std::uint64_t i, std::uint64_t j,
                         const Bipartition &register_cut);

/// Register basis index with A-side bits i and B-side bits j.
std::uint64_t register_index(const Bipartition &register_cut, std::uint64_t i, std::uint64_t j);

/// Exact Tr(U)/2^n. Circuit sources stream basis states (n <= 20).
Complex normalized_trace(const UnitarySource &unitary, int workers = 1);

struct TraceEstimate {
    Complex estimate;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    Complex exact;
};

/// Shot simulation of the top-qubit X and Y measurements.
TraceEstimate simulate_trace_estimation(const Dqc1Config &config, std::uint64_t shots,
                                        const SeedSpec &seed);

} // namespace dqc1

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
 * Dense multi-qubit linear algebra: reshapes, partial traces, Schmidt and
 * operator-Schmidt decompositions, fidelity and majorization.
 */

#pragma once

#include <vector>

#include "dqc1/types.hpp"

namespace dqc1 {

inline constexpr double kDefaultRankTol = 1e-10;

/// Amplitudes reindexed into a d_A x d_B matrix (rows = side A bits).
Matrix reshape_to_cut(const PureState &state, const Bipartition &cut);

/// Singular values of the d_A x d_B reshaping of `state`.
SchmidtSpectrum schmidt_decompose(const PureState &state, const Bipartition &cut);

/// Realigned matrix R((rA,cA),(rB,cB)) = op((rA,rB),(cA,cB)), size d_A^2 x d_B^2.
Matrix realign(const DenseOperator &op, const Bipartition &cut);
/// Inverse of realign().
DenseOperator unrealign(const Matrix &realigned, const Bipartition &cut);

/// Raw singular values of the realigned matrix; squares sum to Tr(op^dagger op).
SchmidtSpectrum operator_schmidt_decompose(const DenseOperator &op, const Bipartition &cut);

/// Best rank-r approximation of `op` in the operator-Schmidt sense across `cut`.
DenseOperator operator_schmidt_truncate(const DenseOperator &op, const Bipartition &cut,
                                        std::size_t rank);

/// Traces out `traced`; the result acts on the remaining qubits in increasing order.
DenseOperator partial_trace(const DenseOperator &op, const std::vector<int> &traced);

/// Tr_B |psi><psi| and Tr_A |psi><psi| without forming the projector.
DenseOperator reduced_on_a(const PureState &state, const Bipartition &cut);
DenseOperator reduced_on_b(const PureState &state, const Bipartition &cut);

/// Number of coefficients strictly above rel_tol * largest. rel_tol in (0, 1).
std::size_t rank_of(const SchmidtSpectrum &spectrum, double rel_tol = kDefaultRankTol);

/// Re Tr(o1^dagger o2) / (|o1|_F |o2|_F).
double fidelity(const DenseOperator &o1, const DenseOperator &o2);

/// True iff p is majorized by q (p ≺ q). Both are sorted internally.
bool majorizes(const ProbabilityVector &q, const ProbabilityVector &p, double tol = 1e-12);

/// Eigenvalues of a Hermitian operator, sorted decreasing.
std::vector<double> hermitian_spectrum(const DenseOperator &op);

/// perm[q] is the new position of qubit q. Must be a bijection on 0..n-1.
DenseOperator qubit_permutation(const DenseOperator &op, const std::vector<int> &perm);
PureState qubit_permutation(const PureState &state, const std::vector<int> &perm);
Bipartition permute_cut(const Bipartition &cut, const std::vector<int> &perm);

/// Applies a 4x4 gate to (q1, q2); the gate's basis is |b_q1 b_q2> with q1 the high bit.
PureState apply_two_qubit_gate(const PureState &state, const Gate4 &gate, int q1, int q2);
/// In-place variant used by circuit execution. Validates arguments, not unitarity.
void apply_two_qubit_gate_inplace(Vector &amplitudes, int num_qubits, const Gate4 &gate, int q1,
                                  int q2);

} // namespace dqc1

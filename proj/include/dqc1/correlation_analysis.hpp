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
 * Experiment-level analyses: bipartition rank scans, balanced tree edges,
 * and the robustness lemmas (maximal overlap, majorant distribution,
 * concentration of reduced spectra, truncation fidelity bounds).
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqc1/dqc1_model.hpp"
#include "dqc1/randomness.hpp"
#include "dqc1/tensor_core.hpp"
#include "dqc1/types.hpp"

namespace dqc1 {

struct CutRecord {
    Bipartition cut;
    /// leading Schmidt coefficients (at most kSpectrumHead)
    std::vector<double> spectrum_head;
    std::size_t rank = 0;
    double log2_rank = 0.0;
    /// size of the smaller side; register-based for theorem1_scan
    int n_0 = 0;
};

struct RankScanReport {
    std::vector<CutRecord> records;
    std::size_t min_rank = 0;
    std::size_t argmin = 0;
    bool exhaustive = false;
    std::string note;
};

inline constexpr std::size_t kSpectrumHead = 8;

/// Smallest Schmidt rank over n/2:n/2 cuts. Qubit 0 is fixed on side A.
/// With `partition_cap`, that many cuts are sampled without replacement.
RankScanReport min_rank_over_equipartitions(const PureState &state, double rel_tol,
                                            std::optional<std::size_t> partition_cap,
                                            const SeedSpec &seed, int workers = 1);

/// [ceil(n/5), floor(2n/5)]
std::pair<int, int> theorem1_window(int n);

struct Theorem1Options {
    std::size_t num_cuts = 50;
    bool exhaustive = false;
    bool random_index = false;
    double rel_tol = kDefaultRankTol;
    int workers = 1;
};

/// All cuts of the n + 1 qubits with the top qubit on A whose register split
/// has n_0 = min(|A| - 1, |B|) inside theorem1_window(n).
std::vector<Bipartition> theorem1_cuts(int n);

/// Lower bounds on the operator Schmidt rank of the final state, one per
/// cut, from the Schmidt rank of rho|t,i,j>. Records carry the register n_0.
RankScanReport theorem1_scan(const Dqc1Config &config, const Theorem1Options &options,
                             const SeedSpec &seed);

/// Nodes 0..num_leaves-1 are leaves (qubits); the rest are internal.
class TreeGraph {
  public:
    TreeGraph(int num_leaves, int num_nodes, std::vector<std::pair<int, int>> edges);

    int num_leaves() const { return num_leaves_; }
    int num_nodes() const { return num_nodes_; }
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }

    /// Leaf count on the `second` side of each edge.
    std::vector<int> leaves_below() const;

  private:
    int num_leaves_;
    int num_nodes_;
    std::vector<std::pair<int, int>> edges_;
};

TreeGraph random_tree(int num_leaves, Rng &rng);
TreeGraph balanced_binary_tree(int num_leaves);
TreeGraph caterpillar_tree(int num_leaves);

struct TreeEdgeChoice {
    std::pair<int, int> edge;
    int n_0 = 0;
    int window_lo = 0;
    int window_hi = 0;
};

/// Throws ClaimFalsified if no edge yields n_0 in the window for n = leaves - 1.
TreeEdgeChoice balanced_tree_edge(const TreeGraph &tree);

double lemma1_max_overlap(const SchmidtSpectrum &spectrum, std::size_t chi_prime, double norm_psi,
                          double norm_phi);

/// (1/2 + (1+d_1)/(2d), (1+d_2)/(2d), ..., (1+d_d)/(2d)) for sum(d_i) = 0.
ProbabilityVector lemma3_distribution(const std::vector<double> &deltas);
ProbabilityVector lemma3_majorant(double delta, std::size_t d);

struct ConcentrationReport {
    std::size_t d_a = 0;
    std::size_t d_b = 0;
    double delta = 0.0;
    std::size_t samples = 0;
    std::vector<double> max_deviation;
    std::vector<std::size_t> nonzero_count;
    double fraction_within = 0.0;

    double window_lo() const { return (1.0 - delta) / static_cast<double>(d_a); }
    double window_hi() const { return (1.0 + delta) / static_cast<double>(d_a); }
};

ConcentrationReport concentration_report(int n_a, int n_b, double delta, std::size_t samples,
                                         const SeedSpec &seed, int workers = 1);

struct Theorem2Bound {
    double exact_bound = 0.0;
    double paper_bound = 0.0;
};

/// exact: d_A max(0, (2(1-eps)^2 - 1)/(1+delta)); stated: max(0, 1-4eps-delta) 2^{n_0}.
Theorem2Bound theorem2_bound(double epsilon, double delta, int n_0);

struct TruncationRow {
    std::size_t rank = 0;
    double fidelity = 0.0;
    double epsilon = 0.0;
    double delta_hat = 0.0;
    double paper_bound = 0.0;
    bool bound_satisfied = false;
};

struct TruncationTable {
    std::vector<TruncationRow> rows;
    std::size_t full_rank = 0;
    int n_0 = 0;
    double delta_hat = 0.0;
};

/// Max |q_k d - 1| over the d = 2^{n_0} leading eigenvalues of Q(0, 0).
double measured_delta(const UnitarySource &unitary, const Bipartition &register_cut);

/// Register part of a full cut with the top qubit on A.
Bipartition register_cut_of(const Bipartition &full_cut);

/// Rank-r operator-Schmidt truncations of the final state across `cut`.
/// An empty `ranks` sweeps 1..chi#.
TruncationTable truncation_experiment(const Dqc1Config &config, const Bipartition &cut,
                                      std::vector<std::size_t> ranks,
                                      double rel_tol = kDefaultRankTol);

} // namespace dqc1

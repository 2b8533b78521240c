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

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

#include "dqc1/correlation_analysis.hpp"
#include "dqc1/tensor_core.hpp"
#include "test_util.hpp"

namespace dqc1 {
namespace {

PureState bell_pairs() {
    // Bell pairs on (0,1) and (2,3)
    Vector v = Vector::Zero(16);
    for (int a : {0, 3}) {
        for (int b : {0, 3}) {
            v[4 * a + b] = 0.5;
        }
    }
    return PureState(4, v);
}

std::size_t binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return static_cast<std::size_t>(std::lround(r));
}

TEST(EquipartitionScan, ProductStateIsRankOne) {
    const auto rep = min_rank_over_equipartitions(PureState(6), 1e-10, std::nullopt, SeedSpec{});
    EXPECT_EQ(rep.min_rank, 1u);
    EXPECT_TRUE(rep.exhaustive);
    EXPECT_EQ(rep.records.size(), binom(5, 2));
}

TEST(EquipartitionScan, BellPairsFindPairRespectingCut) {
    const auto rep = min_rank_over_equipartitions(bell_pairs(), 1e-10, std::nullopt, SeedSpec{});
    ASSERT_EQ(rep.records.size(), 3u);
    EXPECT_EQ(rep.min_rank, 1u);
    EXPECT_EQ(rep.records[rep.argmin].cut.side_a(), (std::vector<int>{0, 1}));
}

TEST(EquipartitionScan, Invariants) {
    std::mt19937_64 rng(3);
    const PureState s = testing::random_state(8, rng);
    const auto rep = min_rank_over_equipartitions(s, 1e-10, std::nullopt, SeedSpec{}, 3);
    std::size_t least = SIZE_MAX;
    for (const auto &r : rep.records) {
        EXPECT_LE(r.rank, std::min(r.cut.d_a(), r.cut.d_b()));
        EXPECT_EQ(r.cut.n_a(), 4);
        EXPECT_TRUE(r.cut.in_a(0));
        least = std::min(least, r.rank);
    }
    EXPECT_EQ(rep.min_rank, least);
    EXPECT_EQ(rep.records[rep.argmin].rank, least);
    EXPECT_EQ(rep.min_rank, 16u);
}

TEST(EquipartitionScan, CappedSamplingIsDeterministic) {
    std::mt19937_64 rng(4);
    const PureState s = testing::random_state(8, rng);
    const auto a = min_rank_over_equipartitions(s, 1e-10, 5, SeedSpec{1, 1}, 1);
    const auto b = min_rank_over_equipartitions(s, 1e-10, 5, SeedSpec{1, 1}, 4);
    ASSERT_EQ(a.records.size(), 5u);
    EXPECT_FALSE(a.exhaustive);
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_EQ(a.records[k].cut, b.records[k].cut);
        EXPECT_EQ(a.records[k].spectrum_head, b.records[k].spectrum_head);
    }
}

TEST(EquipartitionScan, OddQubitCountRejected) {
    EXPECT_THROW(min_rank_over_equipartitions(PureState(5), 1e-10, std::nullopt, SeedSpec{}),
                 DimensionError);
}

TEST(Theorem1, Window) {
    EXPECT_EQ(theorem1_window(5), (std::pair<int, int>{1, 2}));
    EXPECT_EQ(theorem1_window(7), (std::pair<int, int>{2, 2}));
    EXPECT_EQ(theorem1_window(8), (std::pair<int, int>{2, 3}));
    EXPECT_EQ(theorem1_window(10), (std::pair<int, int>{2, 4}));
}

TEST(Theorem1, CutsRespectWindow) {
    for (int n = 5; n <= 10; ++n) {
        const auto [lo, hi] = theorem1_window(n);
        const auto cuts = theorem1_cuts(n);
        EXPECT_FALSE(cuts.empty());
        for (const auto &c : cuts) {
            EXPECT_EQ(c.total_qubits(), n + 1);
            EXPECT_TRUE(c.in_a(0));
            const int reg_n0 = std::min(c.n_a() - 1, c.n_b());
            EXPECT_GE(reg_n0, lo);
            EXPECT_LE(reg_n0, hi);
        }
    }
    EXPECT_THROW(theorem1_cuts(4), DimensionError);
}

TEST(Theorem1, HaarScanMeetsBound) {
    const Dqc1Config cfg(6, 1.0, haar_unitary(64, SeedSpec{2, 0}));
    Theorem1Options opt;
    opt.exhaustive = true;
    const auto rep = theorem1_scan(cfg, opt, SeedSpec{2, 1});
    EXPECT_TRUE(rep.exhaustive);
    for (const auto &r : rep.records) {
        EXPECT_GE(r.rank, dim_of(r.n_0)) << r.cut.to_string();
    }
    EXPECT_GE(rep.min_rank, dim_of(theorem1_window(6).first));
}

TEST(Theorem1, RandomIndexAlsoMeetsBound) {
    const Dqc1Config cfg(6, 1.0, haar_unitary(64, SeedSpec{3, 0}));
    Theorem1Options opt;
    opt.num_cuts = 10;
    opt.random_index = true;
    const auto rep = theorem1_scan(cfg, opt, SeedSpec{3, 1});
    EXPECT_EQ(rep.records.size(), 10u);
    for (const auto &r : rep.records) {
        EXPECT_GE(r.rank, dim_of(r.n_0));
    }
}

TEST(Theorem1, TauZeroGivesRankOne) {
    const Dqc1Config cfg(6, 0.0, haar_unitary(64, SeedSpec{2, 0}));
    Theorem1Options opt;
    opt.num_cuts = 8;
    const auto rep = theorem1_scan(cfg, opt, SeedSpec{2, 1});
    for (const auto &r : rep.records) {
        EXPECT_EQ(r.rank, 1u);
    }
}

TEST(Theorem1, MonotoneInTau) {
    const DenseOperator u = haar_unitary(64, SeedSpec{8, 0});
    Theorem1Options opt;
    opt.num_cuts = 6;
    const auto zero = theorem1_scan(Dqc1Config(6, 0.0, u), opt, SeedSpec{8, 1});
    for (double tau : {0.1, 0.5, 1.0}) {
        const auto rep = theorem1_scan(Dqc1Config(6, tau, u), opt, SeedSpec{8, 1});
        EXPECT_GE(rep.min_rank, zero.min_rank);
        EXPECT_GE(rep.min_rank, 4u);
    }
}

TEST(Theorem1, CircuitSourceAgreesWithDense) {
    const Circuit c = random_two_qubit_circuit(6, 18, SeedSpec{4, 0});
    Theorem1Options opt;
    opt.num_cuts = 6;
    const auto a = theorem1_scan(Dqc1Config(6, 1.0, c), opt, SeedSpec{4, 1});
    const auto b = theorem1_scan(Dqc1Config(6, 1.0, circuit_unitary(c)), opt, SeedSpec{4, 1});
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        EXPECT_EQ(a.records[k].rank, b.records[k].rank);
    }
}

TEST(Theorem1, ProductUnitaryCollapses) {
    const Dqc1Config cfg(6, 1.0, random_product_circuit(6, SeedSpec{1, 0}));
    Theorem1Options opt;
    opt.exhaustive = true;
    const auto rep = theorem1_scan(cfg, opt, SeedSpec{1, 1});
    EXPECT_LE(rep.min_rank, 2u); // the bound fails, as it should for non-generic U
}

// ---------------------------------------------------------------------------
// trees

// Brute-force oracle: delete the edge and count leaves reachable from v.
int leaves_on_v_side(const TreeGraph &t, std::size_t e) {
    const auto [u, v] = t.edges()[e];
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.num_nodes()));
    for (std::size_t k = 0; k < t.edges().size(); ++k) {
        if (k == e) {
            continue;
        }
        adj[t.edges()[k].first].push_back(t.edges()[k].second);
        adj[t.edges()[k].second].push_back(t.edges()[k].first);
    }
    std::vector<bool> seen(adj.size(), false);
    std::queue<int> q;
    q.push(v);
    seen[v] = true;
    int leaves = 0;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        leaves += x < t.num_leaves();
        for (int y : adj[x]) {
            if (!seen[y]) {
                seen[y] = true;
                q.push(y);
            }
        }
    }
    (void)u;
    return leaves;
}

TEST(Trees, LeavesBelowMatchesBruteForce) {
    Rng rng = make_rng(SeedSpec{5, 0});
    for (int trial = 0; trial < 20; ++trial) {
        const TreeGraph t = random_tree(6 + trial, rng);
        const auto below = t.leaves_below();
        for (std::size_t e = 0; e < below.size(); ++e) {
            EXPECT_EQ(below[e], leaves_on_v_side(t, e));
        }
    }
}

TEST(Trees, BuildersProduceValidTrees) {
    Rng rng = make_rng(SeedSpec{6, 0});
    for (int leaves = 3; leaves <= 20; ++leaves) {
        for (const TreeGraph &t : {random_tree(leaves, rng), balanced_binary_tree(leaves),
                                   caterpillar_tree(leaves)}) {
            EXPECT_EQ(t.num_leaves(), leaves);
            // constructing a copy re-runs validation
            EXPECT_NO_THROW(TreeGraph(t.num_leaves(), t.num_nodes(), t.edges()));
        }
    }
}

TEST(Trees, ValidationRejects) {
    // leaf with degree 2
    EXPECT_THROW(TreeGraph(3, 4, {{0, 1}, {1, 3}, {3, 2}}), DimensionError);
    // wrong edge count
    EXPECT_THROW(TreeGraph(3, 4, {{0, 3}, {1, 3}}), DimensionError);
    // internal node of degree 4
    EXPECT_THROW(TreeGraph(4, 5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}), DimensionError);
    // disconnected: a cycle among internals plus isolated leaves
    EXPECT_THROW(TreeGraph(2, 5, {{2, 3}, {3, 4}, {4, 2}, {0, 1}}), DimensionError);
}

TEST(TreeEdge, BalancedEightLeaves) {
    const auto choice = balanced_tree_edge(balanced_binary_tree(8));
    EXPECT_EQ(choice.n_0, 2);
    EXPECT_EQ(choice.window_lo, 2);
    EXPECT_EQ(choice.window_hi, 2);
}

TEST(TreeEdge, RandomTreesAlwaysHaveAnEdge) {
    Rng rng = make_rng(SeedSpec{7, 0});
    for (int trial = 0; trial < 200; ++trial) {
        const int leaves = 6 + trial % 40;
        const TreeGraph t = random_tree(leaves, rng);
        const auto c = balanced_tree_edge(t);
        EXPECT_GE(c.n_0, c.window_lo);
        EXPECT_LE(c.n_0, c.window_hi);
        const auto it = std::find(t.edges().begin(), t.edges().end(), c.edge);
        ASSERT_NE(it, t.edges().end());
        const int b = leaves_on_v_side(t, static_cast<std::size_t>(it - t.edges().begin()));
        EXPECT_EQ(c.n_0, std::min(b, leaves - b));
    }
}

TEST(TreeEdge, CaterpillarToo) {
    for (int leaves = 6; leaves <= 30; ++leaves) {
        EXPECT_NO_THROW(balanced_tree_edge(caterpillar_tree(leaves)));
    }
}

TEST(TreeEdge, TooFewLeaves) {
    EXPECT_THROW(balanced_tree_edge(balanced_binary_tree(5)), DimensionError);
}

// ---------------------------------------------------------------------------
// robustness lemmas

SchmidtSpectrum normalized_spectrum(std::size_t d, std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(d);
    double s = 0.0;
    for (auto &x : v) {
        x = e(rng);
        s += x * x;
    }
    for (auto &x : v) {
        x /= std::sqrt(s);
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return {v, 1.0};
}

// Eckart-Young: the best rank-k approximation of M is its truncated SVD, so
// the largest overlap with a norm-N_phi rank-k state is
// N_psi N_phi |<M, M_k>| / ||M_k||.
double eckart_young_overlap(const SchmidtSpectrum &spec, std::size_t k, double n_psi, double n_phi,
                            std::mt19937_64 &rng) {
    const auto d = static_cast<Eigen::Index>(spec.size());
    Eigen::VectorXd lam(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        lam[i] = spec.coefficients[static_cast<std::size_t>(i)];
    }
    const Matrix m = testing::some_unitary(d, rng) * lam.cast<Complex>().asDiagonal() *
                     testing::some_unitary(d, rng).adjoint();
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto kk = static_cast<Eigen::Index>(k);
    const Matrix mk = svd.matrixU().leftCols(kk) *
                      svd.singularValues().head(kk).cast<Complex>().asDiagonal() *
                      svd.matrixV().leftCols(kk).adjoint();
    const Complex inner = (m.adjoint() * mk).trace();
    return n_psi * n_phi * std::abs(inner) / mk.norm();
}

TEST(Lemma1, Examples) {
    const SchmidtSpectrum bell{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, 1.0};
    EXPECT_NEAR(lemma1_max_overlap(bell, 1, 1.0, 1.0), 0.70710678, 1e-8);
    EXPECT_NEAR(lemma1_max_overlap(bell, 2, 0.5, 3.0), 1.5, 1e-14);
    EXPECT_THROW(lemma1_max_overlap(bell, 0, 1.0, 1.0), DimensionError);
    EXPECT_THROW(lemma1_max_overlap(bell, 3, 1.0, 1.0), DimensionError);
    EXPECT_THROW(lemma1_max_overlap(SchmidtSpectrum{{0.5, 0.5}, 1.0}, 1, 1.0, 1.0), DimensionError);
}

TEST(Lemma1, EckartYoungOracleDimEight) {
    std::mt19937_64 rng(8);
    const auto spec = normalized_spectrum(8, rng);
    EXPECT_NEAR(lemma1_max_overlap(spec, 3, 1.0, 1.0), eckart_young_overlap(spec, 3, 1.0, 1.0, rng),
                1e-10);
}

TEST(Lemma1, MonotoneAndSaturates) {
    std::mt19937_64 rng(9);
    const auto spec = normalized_spectrum(16, rng);
    double prev = 0.0;
    for (std::size_t k = 1; k <= 16; ++k) {
        const double v = lemma1_max_overlap(spec, k, 2.0, 0.5);
        EXPECT_GE(v, prev);
        prev = v;
    }
    EXPECT_NEAR(prev, 1.0, 1e-12);
}

TEST(Lemma1, RandomLowRankStatesNeverBeatIt) {
    std::mt19937_64 rng(10);
    const Eigen::Index d = 6;
    const Matrix psi = testing::gaussian_matrix(d, d, rng).normalized();
    Eigen::JacobiSVD<Matrix> svd(psi);
    std::vector<double> lam(svd.singularValues().data(), svd.singularValues().data() + d);
    const SchmidtSpectrum spec{lam, 1.0};
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix phi =
            (testing::gaussian_matrix(d, 2, rng) * testing::gaussian_matrix(2, d, rng)).normalized();
        const double overlap = std::abs((psi.adjoint() * phi).trace());
        EXPECT_LE(overlap, lemma1_max_overlap(spec, 2, 1.0, 1.0) + 1e-12);
    }
}

TEST(Lemma2, MixtureSpectrumMajorizedBySumOfSpectra) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 4;
        const auto d = static_cast<Eigen::Index>(dim_of(n));
        const Matrix x = testing::random_density(d, rng, 1 + trial % d);
        const Matrix y = testing::random_density(d, rng);
        const auto sx = hermitian_spectrum(DenseOperator(n, x));
        const auto sy = hermitian_spectrum(DenseOperator(n, y));
        const auto sm = hermitian_spectrum(DenseOperator(n, (x + y) / 2.0));
        std::vector<double> sum(sx.size());
        std::vector<double> mix(sm.size());
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] = std::max(0.0, (sx[k] + sy[k]) / 2.0);
            mix[k] = std::max(0.0, sm[k]);
        }
        auto renorm = [](std::vector<double> v) {
            double s = 0.0;
            for (double e : v) {
                s += e;
            }
            for (double &e : v) {
                e /= s;
            }
            return ProbabilityVector(v);
        };
        EXPECT_TRUE(majorizes(renorm(sum), renorm(mix), 1e-10)) << "trial " << trial;
    }
}

TEST(Lemma3, Examples) {
    const auto small = lemma3_majorant(1e-12, 4);
    EXPECT_NEAR(small[0], 0.625, 1e-12);
    for (std::size_t k = 1; k < 4; ++k) {
        EXPECT_NEAR(small[k], 0.125, 1e-12);
    }
    const auto extreme = lemma3_majorant(1.0, 2);
    EXPECT_NEAR(extreme[0], 1.0, 1e-15);
    EXPECT_NEAR(extreme[1], 0.0, 1e-15);
}

TEST(Lemma3, RejectsBadArgs) {
    EXPECT_THROW(lemma3_majorant(0.0, 4), DimensionError);
    EXPECT_THROW(lemma3_majorant(1.5, 4), DimensionError);
    EXPECT_THROW(lemma3_majorant(0.5, 3), DimensionError);
    // deltas that do not sum to zero do not give a probability vector
    EXPECT_THROW(lemma3_distribution({0.5, 0.5}), DimensionError);
}

TEST(Lemma3, MajorantDominatesAdmissibleDeltas) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 2 * (1 + static_cast<std::size_t>(trial % 32));
        const double delta = 0.05 + 0.95 * (u(rng) + 1.0) / 2.0;
        std::vector<double> v(d);
        // zero-sum vector, then scaled into [-delta, delta]
        double mean = 0.0;
        for (auto &x : v) {
            x = u(rng);
            mean += x;
        }
        mean /= static_cast<double>(d);
        double peak = 0.0;
        for (auto &x : v) {
            x -= mean;
            peak = std::max(peak, std::abs(x));
        }
        for (auto &x : v) {
            x *= delta / peak;
        }
        EXPECT_TRUE(majorizes(lemma3_majorant(delta, d), lemma3_distribution(v))) << trial;
    }
}

TEST(Lemma4, TrivialSubsystem) {
    const auto rep = concentration_report(0, 4, 0.5, 10, SeedSpec{1, 0});
    EXPECT_EQ(rep.d_a, 1u);
    EXPECT_DOUBLE_EQ(rep.fraction_within, 1.0);
    for (std::size_t k = 0; k < rep.samples; ++k) {
        EXPECT_NEAR(rep.max_deviation[k], 0.0, 1e-12);
        EXPECT_EQ(rep.nonzero_count[k], 1u);
    }
}

TEST(Lemma4, SmallRegimeAndWorkerInvariance) {
    const auto a = concentration_report(2, 7, 0.5, 40, SeedSpec{2, 0}, 1);
    const auto b = concentration_report(2, 7, 0.5, 40, SeedSpec{2, 0}, 4);
    EXPECT_EQ(a.max_deviation, b.max_deviation);
    EXPECT_EQ(a.nonzero_count, b.nonzero_count);
    EXPECT_GE(a.fraction_within, 0.0);
    EXPECT_LE(a.fraction_within, 1.0);
    for (std::size_t k = 0; k < a.samples; ++k) {
        EXPECT_GE(a.max_deviation[k], 0.0);
        EXPECT_EQ(a.nonzero_count[k], 4u);
    }
}

TEST(Lemma4, RejectsBadArgs) {
    EXPECT_THROW(concentration_report(2, 4, -0.1, 10, SeedSpec{}), DimensionError);
    EXPECT_THROW(concentration_report(2, 4, 0.5, 0, SeedSpec{}), DimensionError);
    EXPECT_THROW(concentration_report(-1, 4, 0.5, 10, SeedSpec{}), DimensionError);
    EXPECT_THROW(concentration_report(5, 4, 0.5, 10, SeedSpec{}), DimensionError);
}

TEST(Theorem2Bounds, Examples) {
    const auto zero = theorem2_bound(0.0, 0.0, 5);
    EXPECT_DOUBLE_EQ(zero.exact_bound, 32.0);
    EXPECT_DOUBLE_EQ(zero.paper_bound, 32.0);
    const auto mid = theorem2_bound(0.1, 0.2, 5);
    EXPECT_NEAR(mid.exact_bound, 32.0 * (2.0 * 0.81 - 1.0) / 1.2, 1e-12);
    EXPECT_NEAR(mid.paper_bound, 12.8, 1e-12);
    EXPECT_GE(mid.exact_bound, mid.paper_bound);
    EXPECT_DOUBLE_EQ(theorem2_bound(1.0 - 1.0 / std::sqrt(2.0), 0.3, 4).exact_bound, 0.0);
    EXPECT_DOUBLE_EQ(theorem2_bound(0.5, 0.3, 4).exact_bound, 0.0);
}

TEST(Theorem2Bounds, RejectsBadArgs) {
    EXPECT_THROW(theorem2_bound(-0.1, 0.0, 2), DimensionError);
    EXPECT_THROW(theorem2_bound(1.0, 0.0, 2), DimensionError);
    EXPECT_THROW(theorem2_bound(0.1, 1.5, 2), DimensionError);
}

TEST(Truncation, FullRankAndFirstRow) {
    const Dqc1Config cfg(5, 1.0, haar_unitary(32, SeedSpec{3, 0}));
    const Bipartition cut(6, {0, 1, 4});
    const auto table = truncation_experiment(cfg, cut, {});
    ASSERT_EQ(table.rows.size(), table.full_rank);
    EXPECT_NEAR(table.rows.back().fidelity, 1.0, 1e-12);
    EXPECT_TRUE(table.rows.back().bound_satisfied);

    const auto spec = operator_schmidt_decompose(final_state(cfg), cut);
    const double want = spec.coefficients[0] / std::sqrt(spec.sum_of_squares());
    EXPECT_NEAR(table.rows.front().fidelity, want, 1e-12);
    for (const auto &row : table.rows) {
        EXPECT_TRUE(row.bound_satisfied) << row.rank;
    }
    EXPECT_EQ(table.n_0, 2);
}

TEST(Truncation, RankOutsideRangeRejected) {
    const Dqc1Config cfg(3, 1.0, haar_unitary(8, SeedSpec{3, 0}));
    const Bipartition cut(4, {0, 1});
    EXPECT_THROW(truncation_experiment(cfg, cut, {1000}), DimensionError);
    EXPECT_THROW(truncation_experiment(cfg, cut, {0}), DimensionError);
}

TEST(Truncation, TooLarge) {
    EXPECT_THROW(truncation_experiment(Dqc1Config(9, 1.0, Circuit(9)), Bipartition(10, {0}), {}),
                 SizeLimitError);
}

} // namespace
} // namespace dqc1

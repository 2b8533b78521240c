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

#include "dqc1/correlation_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include <Eigen/SVD>

#include "dqc1/parallel.hpp"

namespace dqc1 {

namespace {

CutRecord make_record(const Bipartition &cut, const SchmidtSpectrum &spectrum, double rel_tol,
                      int n_0) {
    CutRecord rec{cut, {}, rank_of(spectrum, rel_tol), 0.0, n_0};
    const std::size_t head = std::min(kSpectrumHead, spectrum.size());
    rec.spectrum_head.assign(spectrum.coefficients.begin(),
                             spectrum.coefficients.begin() + static_cast<std::ptrdiff_t>(head));
    rec.log2_rank = rec.rank > 0 ? std::log2(static_cast<double>(rec.rank)) : 0.0;
    return rec;
}

void finish(RankScanReport &report) {
    if (report.records.empty()) {
        return;
    }
    report.argmin = 0;
    for (std::size_t k = 1; k < report.records.size(); ++k) {
        if (report.records[k].rank < report.records[report.argmin].rank) {
            report.argmin = k;
        }
    }
    report.min_rank = report.records[report.argmin].rank;
}

/// Uniform sample of `count` indices out of [0, total), returned sorted.
std::vector<std::size_t> sample_indices(std::size_t total, std::size_t count, const SeedSpec &seed) {
    std::vector<std::size_t> idx(total);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (count >= total) {
        return idx;
    }
    Rng rng = make_rng(seed);
    // partial Fisher-Yates
    for (std::size_t k = 0; k < count; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, total - 1);
        std::swap(idx[k], idx[pick(rng)]);
    }
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    return idx;
}

void combinations(int lo, int hi, int k, std::vector<int> &current,
                  std::vector<std::vector<int>> &out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int q = lo; q < hi; ++q) {
        if (hi - q < k - static_cast<int>(current.size())) {
            break;
        }
        current.push_back(q);
        combinations(q + 1, hi, k, current, out);
        current.pop_back();
    }
}

} // namespace

RankScanReport min_rank_over_equipartitions(const PureState &state, double rel_tol,
                                            std::optional<std::size_t> partition_cap,
                                            const SeedSpec &seed, int workers) {
    const int n = state.num_qubits();
    if (n < 2 || n % 2 != 0) {
        throw DimensionError("min_rank_over_equipartitions: qubit count must be even, got " +
                             std::to_string(n));
    }
    std::vector<std::vector<int>> sides;
    std::vector<int> current{0};
    combinations(1, n, n / 2, current, sides);

    RankScanReport report;
    std::size_t count = sides.size();
    if (partition_cap && *partition_cap < sides.size()) {
        if (*partition_cap < 1) {
            throw DimensionError("min_rank_over_equipartitions: partition_cap must be >= 1");
        }
        count = *partition_cap;
    }
    report.exhaustive = count == sides.size();
    const auto chosen = sample_indices(sides.size(), count, seed);
    report.note = "qubit 0 fixed on side A; " +
                  std::string(report.exhaustive ? "exhaustive over " : "sampled from ") +
                  std::to_string(sides.size()) + " equipartitions";

    std::vector<std::optional<CutRecord>> slots(chosen.size());
    parallel_for(chosen.size(), workers, [&](std::size_t k) {
        const Bipartition cut(n, sides[chosen[k]]);
        slots[k] = make_record(cut, schmidt_decompose(state, cut), rel_tol, cut.n_0());
    });
    for (auto &s : slots) {
        report.records.push_back(std::move(*s));
    }
    finish(report);
    return report;
}

std::pair<int, int> theorem1_window(int n) {
    return {(n + 4) / 5, (2 * n) / 5};
}

std::vector<Bipartition> theorem1_cuts(int n) {
    if (n < 5) {
        throw DimensionError("theorem1 cuts need n >= 5 for a nonempty n_0 window");
    }
    if (n > 24) {
        throw SizeLimitError("theorem1 cuts: n too large to enumerate");
    }
    const auto [lo, hi] = theorem1_window(n);
    std::vector<Bipartition> cuts;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        const int a = std::popcount(mask);
        const int n0 = std::min(a, n - a);
        if (n0 < lo || n0 > hi) {
            continue;
        }
        std::vector<int> side{0};
        for (int q = 0; q < n; ++q) {
            if ((mask >> q) & 1U) {
                side.push_back(q + 1);
            }
        }
        cuts.emplace_back(n + 1, std::move(side));
    }
    std::sort(cuts.begin(), cuts.end(), [](const Bipartition &x, const Bipartition &y) {
        if (x.n_a() != y.n_a()) {
            return x.n_a() < y.n_a();
        }
        return x.side_a() < y.side_a();
    });
    return cuts;
}

RankScanReport theorem1_scan(const Dqc1Config &config, const Theorem1Options &options,
                             const SeedSpec &seed) {
    config.validate();
    const int n = config.n;
    const auto cuts = theorem1_cuts(n);
    const std::size_t count = options.exhaustive ? cuts.size() : options.num_cuts;
    const auto chosen = sample_indices(cuts.size(), count, seed.derive(0));

    RankScanReport report;
    report.exhaustive = chosen.size() == cuts.size();
    report.note = "top qubit on side A; n_0 counts register qubits; " +
                  std::to_string(chosen.size()) + " of " + std::to_string(cuts.size()) +
                  " cuts in the window";

    std::vector<std::optional<CutRecord>> slots(chosen.size());
    parallel_for(chosen.size(), options.workers, [&](std::size_t k) {
        const Bipartition &cut = cuts[chosen[k]];
        const int reg_a = cut.n_a() - 1;
        const int n0 = std::min(reg_a, cut.n_b());
        ProductStateIndex idx{0, 0, 0};
        if (options.random_index) {
            Rng rng = make_rng(seed.derive(1).derive(chosen[k]));
            idx.t = static_cast<int>(rng() & 1U);
            idx.i = std::uniform_int_distribution<std::uint64_t>(0, dim_of(reg_a) - 1)(rng);
            idx.j = std::uniform_int_distribution<std::uint64_t>(0, cut.d_b() - 1)(rng);
        }
        const PureState psi = apply_to_product(config, cut, idx);
        slots[k] = make_record(cut, schmidt_decompose(psi, cut), options.rel_tol, n0);
    });
    for (auto &s : slots) {
        report.records.push_back(std::move(*s));
    }
    finish(report);
    return report;
}

// ---------------------------------------------------------------------------
// Trees

TreeGraph::TreeGraph(int num_leaves, int num_nodes, std::vector<std::pair<int, int>> edges)
    : num_leaves_(num_leaves), num_nodes_(num_nodes), edges_(std::move(edges)) {
    if (num_leaves < 2 || num_nodes < num_leaves) {
        throw DimensionError("TreeGraph: need at least 2 leaves");
    }
    if (static_cast<int>(edges_.size()) != num_nodes - 1) {
        throw DimensionError("TreeGraph: a tree on " + std::to_string(num_nodes) +
                             " nodes has " + std::to_string(num_nodes - 1) + " edges");
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_nodes));
    for (const auto &[u, v] : edges_) {
        if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes || u == v) {
            throw DimensionError("TreeGraph: invalid edge");
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < num_nodes; ++v) {
        const auto deg = adj[v].size();
        if (v < num_leaves && deg != 1) {
            throw DimensionError("TreeGraph: leaf " + std::to_string(v) + " has degree " +
                                 std::to_string(deg));
        }
        if (v >= num_leaves && (deg < 2 || deg > 3)) {
            throw DimensionError("TreeGraph: internal node degree must be 2 or 3");
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(num_nodes), false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                frontier.push(v);
            }
        }
    }
    if (reached != num_nodes) {
        throw DimensionError("TreeGraph: graph is not connected");
    }
}

std::vector<int> TreeGraph::leaves_below() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_nodes_));
    for (const auto &[u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // iterative DFS from node 0; count[v] = leaves in v's subtree
    std::vector<int> parent(static_cast<std::size_t>(num_nodes_), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(num_nodes_));
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int v : adj[u]) {
            if (parent[v] == -1) {
                parent[v] = u;
                stack.push_back(v);
            }
        }
    }
    std::vector<int> count(static_cast<std::size_t>(num_nodes_), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int u = *it;
        if (u < num_leaves_) {
            count[u] += 1;
        }
        if (u != 0) {
            count[parent[u]] += count[u];
        }
    }
    std::vector<int> out;
    out.reserve(edges_.size());
    for (const auto &[u, v] : edges_) {
        out.push_back(parent[v] == u ? count[v] : num_leaves_ - count[u]);
    }
    return out;
}

TreeGraph random_tree(int num_leaves, Rng &rng) {
    if (num_leaves < 2) {
        throw DimensionError("random_tree: need at least 2 leaves");
    }
    std::vector<int> labels(static_cast<std::size_t>(num_leaves));
    std::iota(labels.begin(), labels.end(), 0);
    std::shuffle(labels.begin(), labels.end(), rng);
    if (num_leaves == 2) {
        return {2, 2, {{0, 1}}};
    }
    // start from a star on three leaves, then subdivide a random edge per leaf
    int next_internal = num_leaves;
    std::vector<std::pair<int, int>> edges;
    const int hub = next_internal++;
    for (int k = 0; k < 3; ++k) {
        edges.emplace_back(hub, labels[k]);
    }
    for (int k = 3; k < num_leaves; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const std::size_t e = pick(rng);
        const auto [u, v] = edges[e];
        const int w = next_internal++;
        edges[e] = {u, w};
        edges.emplace_back(w, v);
        edges.emplace_back(w, labels[k]);
    }
    return {num_leaves, next_internal, std::move(edges)};
}

TreeGraph balanced_binary_tree(int num_leaves) {
    if (num_leaves < 2) {
        throw DimensionError("balanced_binary_tree: need at least 2 leaves");
    }
    int next_internal = num_leaves;
    std::vector<std::pair<int, int>> edges;
    // returns the node that roots leaves [lo, hi)
    std::function<int(int, int)> build = [&](int lo, int hi) -> int {
        if (hi - lo == 1) {
            return lo;
        }
        const int mid = lo + (hi - lo) / 2;
        const int left = build(lo, mid);
        const int right = build(mid, hi);
        const int node = next_internal++;
        edges.emplace_back(node, left);
        edges.emplace_back(node, right);
        return node;
    };
    const int mid = num_leaves / 2;
    const int left = build(0, mid);
    const int right = build(mid, num_leaves);
    edges.emplace_back(left, right);
    return {num_leaves, next_internal, std::move(edges)};
}

TreeGraph caterpillar_tree(int num_leaves) {
    if (num_leaves < 3) {
        throw DimensionError("caterpillar_tree: need at least 3 leaves");
    }
    const int spine = num_leaves - 2;
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < spine; ++s) {
        const int node = num_leaves + s;
        if (s > 0) {
            edges.emplace_back(node - 1, node);
        }
        edges.emplace_back(node, s + 1);
    }
    edges.emplace_back(num_leaves, 0);
    edges.emplace_back(num_leaves + spine - 1, num_leaves - 1);
    return {num_leaves, num_leaves + spine, std::move(edges)};
}

TreeEdgeChoice balanced_tree_edge(const TreeGraph &tree) {
    const int leaves = tree.num_leaves();
    if (leaves < 6) {
        throw DimensionError("balanced_tree_edge: need at least 6 leaves");
    }
    const int n = leaves - 1;
    const auto [lo, hi] = theorem1_window(n);
    const auto below = tree.leaves_below();
    for (std::size_t e = 0; e < below.size(); ++e) {
        const int n0 = std::min(below[e], leaves - below[e]);
        if (n0 >= lo && n0 <= hi) {
            return {tree.edges()[e], n0, lo, hi};
        }
    }
    throw ClaimFalsified("balanced_tree_edge: no edge of the tree has n_0 in [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// ---------------------------------------------------------------------------
// Robustness lemmas

double lemma1_max_overlap(const SchmidtSpectrum &spectrum, std::size_t chi_prime, double norm_psi,
                          double norm_phi) {
    if (chi_prime < 1 || chi_prime > spectrum.size()) {
        throw DimensionError("lemma1_max_overlap: chi_prime out of range");
    }
    if (std::abs(spectrum.sum_of_squares() - 1.0) > 1e-10) {
        throw DimensionError("lemma1_max_overlap: spectrum must be normalized");
    }
    auto lambda = spectrum.coefficients;
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    double kept = 0.0;
    for (std::size_t k = 0; k < chi_prime; ++k) {
        kept += lambda[k] * lambda[k];
    }
    return norm_psi * norm_phi * std::sqrt(kept);
}

ProbabilityVector lemma3_distribution(const std::vector<double> &deltas) {
    const std::size_t d = deltas.size();
    if (d < 1) {
        throw DimensionError("lemma3_distribution: empty delta vector");
    }
    std::vector<double> p(d);
    const double scale = 1.0 / (2.0 * static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) {
        p[k] = (1.0 + deltas[k]) * scale;
    }
    p[0] += 0.5;
    return ProbabilityVector(std::move(p));
}

ProbabilityVector lemma3_majorant(double delta, std::size_t d) {
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw DimensionError("lemma3_majorant: delta must lie in (0, 1]");
    }
    if (d < 2 || d % 2 != 0) {
        throw DimensionError("lemma3_majorant: d must be even and >= 2");
    }
    std::vector<double> deltas(d, -delta);
    std::fill(deltas.begin(), deltas.begin() + static_cast<std::ptrdiff_t>(d / 2), delta);
    return lemma3_distribution(deltas);
}

ConcentrationReport concentration_report(int n_a, int n_b, double delta, std::size_t samples,
                                         const SeedSpec &seed, int workers) {
    if (samples < 1) {
        throw DimensionError("concentration_report: samples must be >= 1");
    }
    if (n_a < 0 || n_b < 0 || n_a > n_b) {
        throw DimensionError("concentration_report: need 0 <= n_A <= n_B");
    }
    if (n_a + n_b > 24) {
        throw SizeLimitError("concentration_report: joint register too large");
    }
    if (!(delta >= 0.0)) {
        throw DimensionError("concentration_report: delta must be >= 0");
    }
    ConcentrationReport report;
    report.d_a = dim_of(n_a);
    report.d_b = dim_of(n_b);
    report.delta = delta;
    report.samples = samples;
    report.max_deviation.assign(samples, 0.0);
    report.nonzero_count.assign(samples, 0);

    const auto da = static_cast<Eigen::Index>(report.d_a);
    const auto db = static_cast<Eigen::Index>(report.d_b);
    parallel_for(samples, workers, [&](std::size_t k) {
        Rng rng = make_rng(seed.derive(k));
        const Vector v = haar_state_vector(report.d_a * report.d_b, rng);
        // index a * d_B + b: a = A-side bits (high), b = B-side bits
        const Matrix m = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                                        Eigen::RowMajor>>(v.data(), da, db);
        Eigen::JacobiSVD<Matrix> svd(m);
        const Eigen::VectorXd s = svd.singularValues();
        std::vector<double> q(static_cast<std::size_t>(s.size()));
        for (Eigen::Index t = 0; t < s.size(); ++t) {
            q[static_cast<std::size_t>(t)] = s[t] * s[t];
        }
        std::sort(q.begin(), q.end(), std::greater<>());
        const double threshold = 1e-10 * q.front();
        report.nonzero_count[k] = static_cast<std::size_t>(
            std::count_if(q.begin(), q.end(), [threshold](double x) { return x > threshold; }));
        double dev = 0.0;
        for (std::size_t t = 0; t < report.d_a; ++t) {
            dev = std::max(dev, std::abs(q[t] * static_cast<double>(report.d_a) - 1.0));
        }
        report.max_deviation[k] = dev;
    });
    const auto within = std::count_if(report.max_deviation.begin(), report.max_deviation.end(),
                                      [delta](double d) { return d <= delta; });
    report.fraction_within = static_cast<double>(within) / static_cast<double>(samples);
    return report;
}

Theorem2Bound theorem2_bound(double epsilon, double delta, int n_0) {
    if (!(epsilon >= 0.0) || epsilon >= 1.0) {
        throw DimensionError("theorem2_bound: epsilon must lie in [0, 1)");
    }
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw DimensionError("theorem2_bound: delta must lie in [0, 1]");
    }
    if (n_0 < 0 || n_0 > 62) {
        throw DimensionError("theorem2_bound: n_0 out of range");
    }
    const double d = std::ldexp(1.0, n_0);
    const double one_minus = 1.0 - epsilon;
    // invert sqrt((1 + (1+delta) x) / 2) >= 1 - eps for x = chi/d
    const double exact = d * std::max(0.0, (2.0 * one_minus * one_minus - 1.0) / (1.0 + delta));
    const double stated = std::max(0.0, 1.0 - 4.0 * epsilon - delta) * d;
    return {exact, stated};
}

Bipartition register_cut_of(const Bipartition &full_cut) {
    const Bipartition oriented = top_on_side_a(full_cut);
    std::vector<int> side;
    for (int q : oriented.side_a()) {
        if (q > 0) {
            side.push_back(q - 1);
        }
    }
    if (side.empty()) {
        throw DimensionError("register_cut_of: side A holds only the top qubit");
    }
    return {oriented.total_qubits() - 1, std::move(side)};
}

double measured_delta(const UnitarySource &unitary, const Bipartition &register_cut) {
    const DenseOperator q = q_operator(unitary, 0, 0, register_cut);
    const auto eig = hermitian_spectrum(q);
    const std::size_t m = dim_of(register_cut.n_0());
    double dev = 0.0;
    for (std::size_t k = 0; k < m && k < eig.size(); ++k) {
        dev = std::max(dev, std::abs(eig[k] * static_cast<double>(m) - 1.0));
    }
    return dev;
}

TruncationTable truncation_experiment(const Dqc1Config &config, const Bipartition &cut,
                                      std::vector<std::size_t> ranks, double rel_tol) {
    config.validate();
    if (config.n > 8) {
        throw SizeLimitError("truncation_experiment: n <= 8 required (dense final state)");
    }
    const Bipartition oriented = top_on_side_a(cut);
    const Bipartition reg_cut = register_cut_of(oriented);
    const DenseOperator rho = final_state(config);

    const Matrix realigned = realign(rho, oriented);
    Eigen::BDCSVD<Matrix> svd(realigned, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &s = svd.singularValues();
    SchmidtSpectrum spectrum{{s.data(), s.data() + s.size()}, rho.matrix().norm()};

    TruncationTable table;
    table.full_rank = rank_of(spectrum, rel_tol);
    table.n_0 = reg_cut.n_0();
    table.delta_hat = measured_delta(config.unitary, reg_cut);
    if (ranks.empty()) {
        for (std::size_t r = 1; r <= table.full_rank; ++r) {
            ranks.push_back(r);
        }
    }
    const double delta_for_bound = std::min(table.delta_hat, 1.0);
    for (std::size_t r : ranks) {
        if (r < 1 || r > table.full_rank) {
            throw DimensionError("truncation_experiment: rank " + std::to_string(r) +
                                 " outside [1, " + std::to_string(table.full_rank) + "]");
        }
        const auto k = static_cast<Eigen::Index>(r);
        const Matrix approx = svd.matrixU().leftCols(k) * s.head(k).cast<Complex>().asDiagonal() *
                              svd.matrixV().leftCols(k).adjoint();
        const DenseOperator rho_r = unrealign(approx, oriented);
        TruncationRow row;
        row.rank = r;
        row.fidelity = fidelity(rho, rho_r);
        row.epsilon = std::max(0.0, 1.0 - row.fidelity);
        row.delta_hat = table.delta_hat;
        row.paper_bound =
            theorem2_bound(std::min(row.epsilon, 1.0 - 1e-15), delta_for_bound, table.n_0)
                .paper_bound;
        row.bound_satisfied = static_cast<double>(r) >= row.paper_bound;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace dqc1

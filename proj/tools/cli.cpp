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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqc1/correlation_analysis.hpp"
#include "dqc1/dqc1_model.hpp"
#include "dqc1/io.hpp"
#include "dqc1/parallel.hpp"
#include "dqc1/randomness.hpp"
#include "dqc1/tensor_core.hpp"

namespace dqc1::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<std::int64_t, double, bool, std::string>;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::uint64_t seed = 1;
    int workers = 1;
    double tol = kDefaultRankTol;
    std::string out;
    std::string format;
};

/// A command's result: a table plus a summary object. Both emitters print the
/// same content; only the layout differs.
struct Report {
    std::string command;
    json config = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    json summary = json::object();
    int exit_code = kExitOk;
};

std::string cell_text(const Cell &c) {
    struct Visitor {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string &v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

json cell_json(const Cell &c) {
    return std::visit([](const auto &v) { return json(v); }, c);
}

std::string render_csv(const Report &r, const GlobalOptions &g) {
    std::ostringstream os;
    os << "# tool=" << kToolName << " version=" << kToolVersion << '\n';
    os << "# command=" << r.command << '\n';
    os << "# master_seed=" << g.seed << '\n';
    os << "# config=" << r.config.dump() << '\n';
    for (std::size_t k = 0; k < r.columns.size(); ++k) {
        os << (k ? "," : "") << r.columns[k];
    }
    os << '\n';
    for (const auto &row : r.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            os << (k ? "," : "") << cell_text(row[k]);
        }
        os << '\n';
    }
    os << "# summary=" << r.summary.dump() << '\n';
    return os.str();
}

std::string render_json(const Report &r, const GlobalOptions &g) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = r.command;
    doc["master_seed"] = g.seed;
    doc["config"] = r.config;
    json rows = json::array();
    for (const auto &row : r.rows) {
        json obj = json::object();
        for (std::size_t k = 0; k < row.size(); ++k) {
            obj[r.columns[k]] = cell_json(row[k]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = r.summary;
    return doc.dump(2) + "\n";
}

std::vector<int> parse_int_list(const std::string &text, const char *what) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw DimensionError(std::string(what) + ": not an integer list: " + text);
        }
    }
    return out;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// ---------------------------------------------------------------------------

struct Fig1Args {
    std::vector<int> n_list{4, 6, 8, 10, 12};
    int seeds = 10;
    int gates_factor = 2;
    std::size_t cap = 0;
};

Report cmd_fig1(const Fig1Args &a, const GlobalOptions &g) {
    for (int n : a.n_list) {
        if (n < 2 || n % 2 != 0) {
            throw DimensionError("fig1: every n must be even and >= 2, got " + std::to_string(n));
        }
    }
    if (a.seeds < 1 || a.gates_factor < 1) {
        throw DimensionError("fig1: --seeds and --gates-factor must be >= 1");
    }
    Report r;
    r.command = "fig1";
    r.config = {{"n", a.n_list},
                {"seeds", a.seeds},
                {"gates_factor", a.gates_factor},
                {"tol", g.tol},
                {"partition_cap", a.cap}};
    r.columns = {"n", "seed", "min_rank", "log2_min_rank"};

    struct Task {
        int n;
        int s;
    };
    std::vector<Task> tasks;
    for (int n : a.n_list) {
        for (int s = 0; s < a.seeds; ++s) {
            tasks.push_back({n, s});
        }
    }
    const SeedSpec root{g.seed, 0};
    std::vector<std::size_t> ranks(tasks.size());
    parallel_for(tasks.size(), g.workers, [&](std::size_t k) {
        const auto [n, s] = tasks[k];
        const SeedSpec task_seed =
            root.derive(static_cast<std::uint64_t>(n)).derive(static_cast<std::uint64_t>(s));
        const Circuit circuit = random_two_qubit_circuit(n, a.gates_factor * n, task_seed.derive(0));
        const PureState state = apply_circuit(circuit, PureState(n));
        std::optional<std::size_t> cap;
        if (a.cap > 0) {
            cap = a.cap;
        }
        ranks[k] = min_rank_over_equipartitions(state, g.tol, cap, task_seed.derive(1)).min_rank;
    });
    json medians = json::array();
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        const double rank = static_cast<double>(ranks[k]);
        r.rows.push_back({std::int64_t{tasks[k].n}, std::int64_t{tasks[k].s},
                          static_cast<std::int64_t>(ranks[k]), std::log2(rank)});
    }
    for (int n : a.n_list) {
        std::vector<double> per_n;
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            if (tasks[k].n == n) {
                per_n.push_back(static_cast<double>(ranks[k]));
            }
        }
        const double med = median(per_n);
        r.rows.push_back({std::int64_t{n}, std::string("median"), med, std::log2(med)});
        medians.push_back({{"n", n},
                           {"median_min_rank", med},
                           {"log2_median", std::log2(med)},
                           {"reference_2_pow_n_half", std::ldexp(1.0, n / 2)}});
    }
    r.summary = {{"medians", medians}};
    return r;
}

// ---------------------------------------------------------------------------

struct UnitaryArgs {
    std::string mode = "haar";
    int gates_factor = 2;
};

UnitarySource make_unitary(int n, const UnitaryArgs &u, const SeedSpec &seed) {
    if (u.mode == "haar") {
        if (n > kDefaultDenseLimit) {
            throw SizeLimitError("haar mode is dense; use --mode circuit for n > 12");
        }
        return haar_unitary(dim_of(n), seed);
    }
    if (n < 2) {
        throw DimensionError("circuit modes need n >= 2");
    }
    if (u.mode == "circuit") {
        if (u.gates_factor < 1) {
            throw DimensionError("--gates-factor must be >= 1");
        }
        return random_two_qubit_circuit(n, u.gates_factor * n, seed);
    }
    if (u.mode == "product") {
        return random_product_circuit(n, seed);
    }
    throw DimensionError("unknown --mode " + u.mode + " (haar|circuit|product)");
}

struct Thm1Args {
    int n = 8;
    std::size_t cuts = 50;
    double tau = 1.0;
    UnitaryArgs unitary;
    bool exhaustive = false;
    bool random_index = false;
};

Report cmd_thm1(const Thm1Args &a, const GlobalOptions &g) {
    if (a.n < 5) {
        throw DimensionError("thm1: n must be >= 5");
    }
    const SeedSpec root{g.seed, 0};
    Dqc1Config config(a.n, a.tau, make_unitary(a.n, a.unitary, root.derive(0)));
    Theorem1Options opt;
    opt.num_cuts = a.cuts;
    opt.exhaustive = a.exhaustive;
    opt.random_index = a.random_index;
    opt.rel_tol = g.tol;
    opt.workers = g.workers;
    const RankScanReport scan = theorem1_scan(config, opt, root.derive(1));

    Report r;
    r.command = "thm1";
    r.config = {{"n", a.n},
                {"tau", a.tau},
                {"mode", a.unitary.mode},
                {"gates_factor", a.unitary.gates_factor},
                {"cuts", a.cuts},
                {"exhaustive", a.exhaustive},
                {"random_index", a.random_index},
                {"tol", g.tol}};
    r.columns = {"cut", "n_0", "rank", "required", "meets_2_pow_n0"};
    bool every_cut = true;
    for (const auto &rec : scan.records) {
        const auto required = static_cast<std::int64_t>(dim_of(rec.n_0));
        const bool ok = static_cast<std::int64_t>(rec.rank) >= required;
        every_cut = every_cut && ok;
        r.rows.push_back({rec.cut.to_string(), std::int64_t{rec.n_0},
                          static_cast<std::int64_t>(rec.rank), required, ok});
    }
    const auto [lo, hi] = theorem1_window(a.n);
    const auto global_bound = static_cast<std::int64_t>(dim_of(lo));
    const bool pass = static_cast<std::int64_t>(scan.min_rank) >= global_bound;
    std::string explanation;
    if (pass) {
        explanation = "every sampled cut has a Schmidt-rank lower bound >= 2^ceil(n/5)";
    } else if (a.tau == 0.0) {
        explanation = "tau = 0: the final state is proportional to the identity, rank 1";
    } else if (a.unitary.mode == "product") {
        explanation = "U factorizes into single-qubit gates: rho|t,i,j> is a sum of two product "
                      "states, so the bound collapses to <= 2";
    } else {
        explanation = "a cut fell below 2^ceil(n/5)";
    }
    r.summary = {{"window", {lo, hi}},
                 {"cuts_scanned", scan.records.size()},
                 {"exhaustive", scan.exhaustive},
                 {"min_rank", scan.min_rank},
                 {"argmin_cut", scan.records.empty() ? "" : scan.records[scan.argmin].cut.to_string()},
                 {"global_bound", global_bound},
                 {"every_cut_meets_2_pow_n0", every_cut},
                 {"pass", pass},
                 {"explanation", explanation},
                 {"note", scan.note}};
    r.exit_code = pass ? kExitOk : kExitFalsified;
    return r;
}

// ---------------------------------------------------------------------------

struct Lemma4Args {
    int na = 2;
    int nb = 9;
    double delta = 0.5;
    std::size_t samples = 200;
};

Report cmd_lemma4(const Lemma4Args &a, const GlobalOptions &g) {
    const ConcentrationReport rep =
        concentration_report(a.na, a.nb, a.delta, a.samples, SeedSpec{g.seed, 0}, g.workers);
    Report r;
    r.command = "lemma4";
    r.config = {{"na", a.na}, {"nb", a.nb}, {"delta", a.delta}, {"samples", a.samples}};
    r.columns = {"sample", "max_deviation", "nonzero_count", "within"};
    bool counts_ok = true;
    for (std::size_t k = 0; k < rep.samples; ++k) {
        counts_ok = counts_ok && rep.nonzero_count[k] == rep.d_a;
        r.rows.push_back({static_cast<std::int64_t>(k), rep.max_deviation[k],
                          static_cast<std::int64_t>(rep.nonzero_count[k]),
                          rep.max_deviation[k] <= rep.delta});
    }
    r.summary = {{"d_a", rep.d_a},
                 {"d_b", rep.d_b},
                 {"delta", rep.delta},
                 {"samples", rep.samples},
                 {"window", {rep.window_lo(), rep.window_hi()}},
                 {"fraction_within", rep.fraction_within},
                 {"nonzero_count_equals_d_a", counts_ok}};
    r.exit_code = counts_ok ? kExitOk : kExitFalsified;
    return r;
}

// ---------------------------------------------------------------------------

struct TraceArgs {
    std::string cmat;
    std::string circuit;
    int qubits = 0;
    std::uint64_t shots = 10000;
    double tau = 1.0;
};

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return in;
}

Report cmd_trace(const TraceArgs &a, const GlobalOptions &g) {
    if (a.cmat.empty() == a.circuit.empty()) {
        throw DimensionError("trace: give exactly one of --cmat or --circuit");
    }
    std::optional<UnitarySource> source;
    std::string input_kind;
    if (!a.cmat.empty()) {
        auto in = open_input(a.cmat);
        const Matrix m = read_cmat(in);
        const auto dim = static_cast<std::size_t>(m.rows());
        if (m.rows() != m.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
            throw DimensionError("trace: CMAT input must be square with a power-of-two size >= 2");
        }
        int n = 0;
        while (dim_of(n) < dim) {
            ++n;
        }
        DenseOperator u(n, m);
        if (!u.is_unitary(1e-8)) {
            throw DimensionError("trace: input matrix is not unitary within 1e-8");
        }
        source = std::move(u);
        input_kind = "cmat";
    } else {
        auto in = open_input(a.circuit);
        std::optional<int> qubits;
        if (a.qubits > 0) {
            qubits = a.qubits;
        }
        source = read_circuit(in, qubits);
        input_kind = "circuit";
    }
    const int n = source_qubits(*source);
    Dqc1Config config(n, a.tau, *source);
    const Complex exact = normalized_trace(config.unitary, g.workers);
    const TraceEstimate est = simulate_trace_estimation(config, a.shots, SeedSpec{g.seed, 0});

    Report r;
    r.command = "trace";
    r.config = {{"input", input_kind}, {"qubits", n}, {"shots", a.shots}, {"tau", a.tau}};
    r.columns = {"exact_re", "exact_im", "estimate_re", "estimate_im", "stderr_re", "stderr_im"};
    r.rows.push_back({exact.real(), exact.imag(), est.estimate.real(), est.estimate.imag(),
                      est.stderr_re, est.stderr_im});
    r.summary = {{"exact", {{"re", exact.real()}, {"im", exact.imag()}}},
                 {"estimate", {{"re", est.estimate.real()}, {"im", est.estimate.imag()}}},
                 {"stderr", {{"re", est.stderr_re}, {"im", est.stderr_im}}}};
    return r;
}

// ---------------------------------------------------------------------------

struct TreeArgs {
    int leaves = 16;
    int trees = 100;
    std::string shape = "random";
};

Report cmd_tree_edge(const TreeArgs &a, const GlobalOptions &g) {
    if (a.leaves < 6) {
        throw DimensionError("tree-edge: --leaves must be >= 6");
    }
    if (a.trees < 1) {
        throw DimensionError("tree-edge: --trees must be >= 1");
    }
    if (a.shape != "random" && a.shape != "balanced" && a.shape != "caterpillar") {
        throw DimensionError("tree-edge: unknown --shape " + a.shape);
    }
    Report r;
    r.command = "tree-edge";
    r.config = {{"leaves", a.leaves}, {"trees", a.trees}, {"shape", a.shape}};
    r.columns = {"tree_id", "edge_u", "edge_v", "n_0", "window_lo", "window_hi"};

    const auto count = static_cast<std::size_t>(a.trees);
    std::vector<std::optional<TreeEdgeChoice>> choices(count);
    parallel_for(count, g.workers, [&](std::size_t k) {
        Rng rng = make_rng(SeedSpec{g.seed, 0}.derive(k));
        const TreeGraph tree = a.shape == "balanced"      ? balanced_binary_tree(a.leaves)
                               : a.shape == "caterpillar" ? caterpillar_tree(a.leaves)
                                                          : random_tree(a.leaves, rng);
        try {
            choices[k] = balanced_tree_edge(tree);
        } catch (const ClaimFalsified &) {
            choices[k].reset();
        }
    });
    const auto [lo, hi] = theorem1_window(a.leaves - 1);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < count; ++k) {
        if (choices[k]) {
            const auto &c = *choices[k];
            r.rows.push_back({static_cast<std::int64_t>(k), std::int64_t{c.edge.first},
                              std::int64_t{c.edge.second}, std::int64_t{c.n_0},
                              std::int64_t{c.window_lo}, std::int64_t{c.window_hi}});
        } else {
            ++failures;
            r.rows.push_back({static_cast<std::int64_t>(k), std::int64_t{-1}, std::int64_t{-1},
                              std::int64_t{-1}, std::int64_t{lo}, std::int64_t{hi}});
        }
    }
    r.summary = {{"window", {lo, hi}}, {"trees_without_edge", failures}};
    r.exit_code = failures == 0 ? kExitOk : kExitFalsified;
    return r;
}

// ---------------------------------------------------------------------------

struct Thm2Args {
    int n = 7;
    double tau = 1.0;
    std::string cut;
    std::string ranks;
    UnitaryArgs unitary;
};

Report cmd_thm2(const Thm2Args &a, const GlobalOptions &g) {
    if (a.n < 2 || a.n > 8) {
        throw DimensionError("thm2: n must lie in [2, 8]");
    }
    std::vector<int> side;
    if (a.cut.empty()) {
        const int reg = std::max(1, theorem1_window(a.n).first);
        side.push_back(0);
        for (int q = 1; q <= reg; ++q) {
            side.push_back(q);
        }
    } else {
        side = parse_int_list(a.cut, "--cut");
        if (std::find(side.begin(), side.end(), 0) == side.end()) {
            side.push_back(0);
        }
    }
    const Bipartition cut(a.n + 1, side);
    std::vector<std::size_t> ranks;
    for (int r : parse_int_list(a.ranks, "--ranks")) {
        if (r < 1) {
            throw DimensionError("thm2: ranks must be >= 1");
        }
        ranks.push_back(static_cast<std::size_t>(r));
    }
    Dqc1Config config(a.n, a.tau, make_unitary(a.n, a.unitary, SeedSpec{g.seed, 0}.derive(0)));
    const TruncationTable table = truncation_experiment(config, cut, ranks, g.tol);

    Report r;
    r.command = "thm2";
    r.config = {{"n", a.n},
                {"tau", a.tau},
                {"mode", a.unitary.mode},
                {"gates_factor", a.unitary.gates_factor},
                {"cut", cut.to_string()},
                {"ranks", a.ranks.empty() ? std::string("full") : a.ranks},
                {"tol", g.tol}};
    r.columns = {"r", "F", "epsilon", "delta_hat", "paper_bound", "bound_satisfied"};
    bool all = true;
    for (const auto &row : table.rows) {
        all = all && row.bound_satisfied;
        r.rows.push_back({static_cast<std::int64_t>(row.rank), row.fidelity, row.epsilon,
                          row.delta_hat, row.paper_bound, row.bound_satisfied});
    }
    r.summary = {{"full_rank", table.full_rank},
                 {"n_0", table.n_0},
                 {"delta_hat", table.delta_hat},
                 {"all_bounds_satisfied", all}};
    r.exit_code = all ? kExitOk : kExitFalsified;
    return r;
}

// ---------------------------------------------------------------------------

void emit(const Report &report, const std::string &default_format, const GlobalOptions &g,
          std::ostream &out) {
    const std::string format = g.format.empty() ? default_format : g.format;
    const std::string text = format == "json" ? render_json(report, g) : render_csv(report, g);
    if (g.out.empty() || g.out == "-") {
        out << text;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + g.out + " for writing");
    }
    file << text;
    if (!file) {
        throw IoError("write to " + g.out + " failed");
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Correlation and rank experiments for the one-clean-qubit circuit", std::string(kToolName)};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--seed", g.seed, "master seed recorded in every output")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads (does not change results)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol", g.tol, "relative rank tolerance")
        ->check(CLI::Range(1e-300, 1.0 - 1e-16))
        ->capture_default_str();
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    Fig1Args fig1;
    auto *c_fig1 = app.add_subcommand("fig1", "min equipartition Schmidt rank of random circuits");
    c_fig1->add_option("--n", fig1.n_list, "even register sizes")->delimiter(',');
    c_fig1->add_option("--seeds", fig1.seeds)->capture_default_str();
    c_fig1->add_option("--gates-factor", fig1.gates_factor, "gates per qubit")->capture_default_str();
    c_fig1->add_option("--cap", fig1.cap, "sample this many cuts (0 = exhaustive)");

    Thm1Args thm1;
    auto *c_thm1 = app.add_subcommand("thm1", "operator Schmidt rank lower bounds across cuts");
    c_thm1->add_option("--n", thm1.n)->capture_default_str();
    c_thm1->add_option("--cuts", thm1.cuts)->capture_default_str();
    c_thm1->add_option("--tau", thm1.tau)->capture_default_str();
    c_thm1->add_option("--mode", thm1.unitary.mode, "haar|circuit|product")->capture_default_str();
    c_thm1->add_option("--gates-factor", thm1.unitary.gates_factor)->capture_default_str();
    c_thm1->add_flag("--exhaustive", thm1.exhaustive);
    c_thm1->add_flag("--random-index", thm1.random_index);

    Lemma4Args lemma4;
    auto *c_lemma4 = app.add_subcommand("lemma4", "eigenvalue concentration of random reductions");
    c_lemma4->add_option("--na", lemma4.na)->capture_default_str();
    c_lemma4->add_option("--nb", lemma4.nb)->capture_default_str();
    c_lemma4->add_option("--delta", lemma4.delta)->capture_default_str();
    c_lemma4->add_option("--samples", lemma4.samples)->capture_default_str();

    TraceArgs trace;
    auto *c_trace = app.add_subcommand("trace", "exact and shot-estimated normalized trace");
    c_trace->add_option("--cmat", trace.cmat, "CMAT v1 unitary");
    c_trace->add_option("--circuit", trace.circuit, "circuit spec file");
    c_trace->add_option("--qubits", trace.qubits, "register size for --circuit");
    c_trace->add_option("--shots", trace.shots)->capture_default_str();
    c_trace->add_option("--tau", trace.tau)->capture_default_str();

    TreeArgs tree;
    auto *c_tree = app.add_subcommand("tree-edge", "balanced edge search on trees");
    c_tree->add_option("--leaves", tree.leaves)->capture_default_str();
    c_tree->add_option("--trees", tree.trees)->capture_default_str();
    c_tree->add_option("--shape", tree.shape, "random|balanced|caterpillar")->capture_default_str();

    Thm2Args thm2;
    auto *c_thm2 = app.add_subcommand("thm2", "truncation fidelity vs. rank bound table");
    c_thm2->add_option("--n", thm2.n)->capture_default_str();
    c_thm2->add_option("--tau", thm2.tau)->capture_default_str();
    c_thm2->add_option("--cut", thm2.cut, "side-A qubits, comma separated (top qubit implied)");
    c_thm2->add_option("--ranks", thm2.ranks, "comma separated (default: full sweep)");
    c_thm2->add_option("--mode", thm2.unitary.mode, "haar|circuit|product")->capture_default_str();
    c_thm2->add_option("--gates-factor", thm2.unitary.gates_factor)->capture_default_str();

    for (auto *sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Report report;
        std::string default_format = "csv";
        if (c_fig1->parsed()) {
            report = cmd_fig1(fig1, g);
        } else if (c_thm1->parsed()) {
            report = cmd_thm1(thm1, g);
            default_format = "json";
        } else if (c_lemma4->parsed()) {
            report = cmd_lemma4(lemma4, g);
            default_format = "json";
        } else if (c_trace->parsed()) {
            report = cmd_trace(trace, g);
            default_format = "json";
        } else if (c_tree->parsed()) {
            report = cmd_tree_edge(tree, g);
        } else {
            report = cmd_thm2(thm2, g);
        }
        emit(report, default_format, g, out);
        return report.exit_code;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ClaimFalsified &e) {
        err << "claim falsified: " << e.what() << '\n';
        return kExitFalsified;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace dqc1::cli

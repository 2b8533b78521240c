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

#include "dqc1/dqc1_model.hpp"

#include <cmath>
#include <random>
#include <string>

#include "dqc1/parallel.hpp"
#include "dqc1/randomness.hpp"
#include "dqc1/tensor_core.hpp"

namespace dqc1 {

namespace {

// Register qubit k is global qubit k + 1. Bit positions coincide: global
// qubit q of the (n+1)-qubit system sits at bit n - q, as does register
// qubit q - 1 of the n-qubit register.
std::vector<int> to_register(const std::vector<int> &global) {
    std::vector<int> out;
    for (int q : global) {
        if (q > 0) {
            out.push_back(q - 1);
        }
    }
    return out;
}

std::uint64_t scatter(const std::vector<int> &register_qubits, int n, std::uint64_t bits) {
    const int k = static_cast<int>(register_qubits.size());
    std::uint64_t x = 0;
    for (int b = 0; b < k; ++b) {
        if ((bits >> (k - 1 - b)) & 1U) {
            x |= std::uint64_t{1} << bit_position(n, register_qubits[b]);
        }
    }
    return x;
}

} // namespace

int source_qubits(const UnitarySource &source) {
    return std::visit([](const auto &u) { return u.num_qubits(); }, source);
}

Vector apply_unitary(const UnitarySource &source, const Vector &register_state, bool adjoint) {
    if (const auto *dense = std::get_if<DenseOperator>(&source)) {
        if (static_cast<std::size_t>(register_state.size()) != dense->dimension()) {
            throw DimensionError("apply_unitary: register size mismatch");
        }
        return adjoint ? Vector(dense->matrix().adjoint() * register_state)
                       : Vector(dense->matrix() * register_state);
    }
    const auto &circuit = std::get<Circuit>(source);
    Vector out = register_state;
    if (adjoint) {
        apply_circuit_inplace(circuit.adjoint(), out);
    } else {
        apply_circuit_inplace(circuit, out);
    }
    return out;
}

Dqc1Config::Dqc1Config(int n_qubits, double polarization, UnitarySource source)
    : n(n_qubits), tau(polarization), unitary(std::move(source)) {
    validate();
    // Circuits are unitary gate by gate. For a dense U a full U^dagger U costs
    // O(d^3); probing U^dagger U v = v with a fixed Gaussian v is O(d^2) and
    // catches any non-unitary matrix with probability one.
    if (const auto *dense = std::get_if<DenseOperator>(&unitary)) {
        const Matrix &u = dense->matrix();
        Rng rng(0x5eed);
        std::normal_distribution<double> g(0.0, 1.0);
        Vector v(u.cols());
        for (Eigen::Index k = 0; k < v.size(); ++k) {
            v[k] = Complex(g(rng), g(rng));
        }
        v.normalize();
        const Vector back = u.adjoint() * (u * v);
        if ((back - v).cwiseAbs().maxCoeff() > 1e-10) {
            throw DimensionError("Dqc1Config: unitary source is not unitary within 1e-10");
        }
    }
}

void Dqc1Config::validate() const {
    if (n < 1) {
        throw DimensionError("Dqc1Config: n must be >= 1");
    }
    if (!(tau >= 0.0 && tau <= 1.0)) {
        throw DimensionError("Dqc1Config: tau must lie in [0, 1]");
    }
    if (source_qubits(unitary) != n) {
        throw DimensionError("Dqc1Config: unitary acts on " +
                             std::to_string(source_qubits(unitary)) + " qubits, expected " +
                             std::to_string(n));
    }
}

DenseOperator final_state(const Dqc1Config &config, int dense_limit) {
    config.validate();
    const int n = config.n;
    if (n > dense_limit) {
        throw SizeLimitError("final_state: n = " + std::to_string(n) +
                             " exceeds the dense limit of " + std::to_string(dense_limit));
    }
    Matrix u;
    if (const auto *dense = std::get_if<DenseOperator>(&config.unitary)) {
        u = dense->matrix();
    } else {
        u = circuit_unitary(std::get<Circuit>(config.unitary), dense_limit).matrix();
    }
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    Matrix rho = Matrix::Zero(2 * d, 2 * d);
    rho.topLeftCorner(d, d).setIdentity();
    rho.bottomRightCorner(d, d).setIdentity();
    rho.topRightCorner(d, d) = config.tau * u.adjoint();
    rho.bottomLeftCorner(d, d) = config.tau * u;
    rho /= static_cast<double>(dim_of(n + 1));
    return {n + 1, std::move(rho)};
}

Bipartition top_on_side_a(const Bipartition &cut) {
    return cut.in_a(0) ? cut : cut.swapped();
}

std::uint64_t register_index(const Bipartition &register_cut, std::uint64_t i, std::uint64_t j) {
    if (i >= register_cut.d_a() || j >= register_cut.d_b()) {
        throw DimensionError("register_index: (i, j) out of range for the cut");
    }
    const int n = register_cut.total_qubits();
    return scatter(register_cut.side_a(), n, i) | scatter(register_cut.side_b(), n, j);
}

PureState apply_to_product(const Dqc1Config &config, const Bipartition &cut,
                           const ProductStateIndex &idx) {
    config.validate();
    const int n = config.n;
    if (cut.total_qubits() != n + 1) {
        throw DimensionError("apply_to_product: cut must cover the n + 1 qubits");
    }
    const Bipartition oriented = top_on_side_a(cut);
    const auto reg_a = to_register(oriented.side_a());
    const auto reg_b = to_register(oriented.side_b());
    if (idx.t != 0 && idx.t != 1) {
        throw DimensionError("apply_to_product: t must be 0 or 1");
    }
    if (idx.i >= dim_of(static_cast<int>(reg_a.size())) ||
        idx.j >= dim_of(static_cast<int>(reg_b.size()))) {
        throw DimensionError("apply_to_product: (i, j) out of range for the cut");
    }
    const std::uint64_t x = scatter(reg_a, n, idx.i) | scatter(reg_b, n, idx.j);
    const auto d = static_cast<Eigen::Index>(dim_of(n));

    Vector basis = Vector::Zero(d);
    basis[static_cast<Eigen::Index>(x)] = 1.0;
    // t = 0 picks the lower-left block (U), t = 1 the upper-right block (U^dagger)
    const Vector moved = apply_unitary(config.unitary, basis, idx.t == 1);

    const double c = 1.0 / static_cast<double>(dim_of(n + 1));
    Vector psi = Vector::Zero(2 * d);
    psi[static_cast<Eigen::Index>(idx.t) * d + static_cast<Eigen::Index>(x)] = c;
    psi.segment((1 - idx.t) * d, d) += (c * config.tau) * moved;
    return {n + 1, std::move(psi)};
}

DenseOperator sigma_b(const Dqc1Config &config, const Bipartition &cut,
                      const ProductStateIndex &idx, int dense_limit) {
    const Bipartition oriented = top_on_side_a(cut);
    if (oriented.n_b() > dense_limit) {
        throw SizeLimitError("sigma_b: reduced operator on " + std::to_string(oriented.n_b()) +
                             " qubits exceeds the dense limit");
    }
    return reduced_on_b(apply_to_product(config, oriented, idx), oriented);
}

DenseOperator q_operator(const UnitarySource &unitary, std::uint64_t i, std::uint64_t j,
                         const Bipartition &register_cut) {
    const int n = source_qubits(unitary);
    if (register_cut.total_qubits() != n) {
        throw DimensionError("q_operator: cut must cover the register under U");
    }
    const std::uint64_t x = register_index(register_cut, i, j);
    Vector basis = Vector::Zero(static_cast<Eigen::Index>(dim_of(n)));
    basis[static_cast<Eigen::Index>(x)] = 1.0;
    const PureState moved(n, apply_unitary(unitary, basis));
    return reduced_on_b(moved, register_cut);
}

Complex normalized_trace(const UnitarySource &unitary, int workers) {
    if (const auto *dense = std::get_if<DenseOperator>(&unitary)) {
        return dense->trace() / static_cast<double>(dense->dimension());
    }
    const auto &circuit = std::get<Circuit>(unitary);
    const int n = circuit.num_qubits();
    if (n > 20) {
        throw SizeLimitError("normalized_trace: circuit traces are limited to 20 qubits");
    }
    const std::size_t dim = dim_of(n);
    std::vector<Complex> diagonal(dim);
    parallel_for(dim, workers, [&](std::size_t x) {
        Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
        v[static_cast<Eigen::Index>(x)] = 1.0;
        apply_circuit_inplace(circuit, v);
        diagonal[x] = v[static_cast<Eigen::Index>(x)];
    });
    Complex sum{0.0, 0.0};
    for (const auto &d : diagonal) {
        sum += d;
    }
    return sum / static_cast<double>(dim);
}

TraceEstimate simulate_trace_estimation(const Dqc1Config &config, std::uint64_t shots,
                                        const SeedSpec &seed) {
    config.validate();
    if (shots < 1) {
        throw DimensionError("simulate_trace_estimation: shots must be >= 1");
    }
    if (config.tau == 0.0) {
        throw DimensionError("simulate_trace_estimation: tau = 0 carries no signal");
    }
    const Complex exact = normalized_trace(config.unitary);
    const double tau = config.tau;
    auto clamp01 = [](double p) { return std::min(1.0, std::max(0.0, p)); };
    const double p_x = clamp01((1.0 + tau * exact.real()) / 2.0);
    const double p_y = clamp01((1.0 - tau * exact.imag()) / 2.0);

    Rng rng_x = make_rng(seed.derive(0));
    Rng rng_y = make_rng(seed.derive(1));
    std::binomial_distribution<std::uint64_t> draw_x(shots, p_x);
    std::binomial_distribution<std::uint64_t> draw_y(shots, p_y);
    const auto plus_x = static_cast<double>(draw_x(rng_x));
    const auto plus_y = static_cast<double>(draw_y(rng_y));
    const auto total = static_cast<double>(shots);

    // outcomes are +-1; the mean is 2 * (fraction of +) - 1
    const double mean_x = 2.0 * plus_x / total - 1.0;
    const double mean_y = 2.0 * plus_y / total - 1.0;
    TraceEstimate out;
    out.exact = exact;
    out.estimate = Complex{mean_x / tau, -mean_y / tau};
    out.stderr_re = std::sqrt(std::max(0.0, 1.0 - mean_x * mean_x) / total) / tau;
    out.stderr_im = std::sqrt(std::max(0.0, 1.0 - mean_y * mean_y) / total) / tau;
    return out;
}

} // namespace dqc1

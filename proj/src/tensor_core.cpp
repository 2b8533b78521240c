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

#include "dqc1/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dqc1/kernels.hpp"

namespace dqc1 {

namespace {

void check_register(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw DimensionError("register size must be in [1, 30], got " +
                             std::to_string(num_qubits));
    }
}

std::vector<double> singular_values(const Matrix &m) {
    std::vector<double> out;
    if (m.size() == 0) {
        return out;
    }
    Eigen::VectorXd s;
    if (std::min(m.rows(), m.cols()) <= 16) {
        Eigen::JacobiSVD<Matrix, Eigen::ColPivHouseholderQRPreconditioner> svd(m);
        s = svd.singularValues();
    } else {
        Eigen::BDCSVD<Matrix> svd(m);
        s = svd.singularValues();
    }
    out.assign(s.data(), s.data() + s.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    for (auto &v : out) {
        v = std::max(v, 0.0);
    }
    return out;
}

void check_cut(int num_qubits, const Bipartition &cut, const char *what) {
    if (cut.total_qubits() != num_qubits) {
        throw DimensionError(std::string(what) + ": cut is over " +
                             std::to_string(cut.total_qubits()) + " qubits but operand has " +
                             std::to_string(num_qubits));
    }
}

bool is_permutation(const std::vector<int> &perm, int n) {
    if (static_cast<int>(perm.size()) != n) {
        return false;
    }
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) {
            return false;
        }
        seen[p] = true;
    }
    return true;
}

std::vector<std::uint64_t> permuted_indices(int n, const std::vector<int> &perm) {
    if (!is_permutation(perm, n)) {
        throw DimensionError("qubit_permutation: not a bijection on the register");
    }
    const std::size_t dim = dim_of(n);
    std::vector<std::uint64_t> map(dim, 0);
    for (std::size_t x = 0; x < dim; ++x) {
        std::uint64_t y = 0;
        for (int q = 0; q < n; ++q) {
            if ((x >> bit_position(n, q)) & 1U) {
                y |= std::uint64_t{1} << bit_position(n, perm[q]);
            }
        }
        map[x] = y;
    }
    return map;
}

} // namespace

// ---------------------------------------------------------------------------
// Value types

PureState::PureState(int num_qubits) : num_qubits_(num_qubits) {
    check_register(num_qubits);
    amps_ = Vector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
    amps_[0] = 1.0;
}

PureState::PureState(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_register(num_qubits);
    if (static_cast<std::size_t>(amps_.size()) != dim_of(num_qubits)) {
        throw DimensionError("PureState: expected 2^" + std::to_string(num_qubits) +
                             " amplitudes, got " + std::to_string(amps_.size()));
    }
}

PureState PureState::basis(int num_qubits, std::uint64_t index) {
    check_register(num_qubits);
    if (index >= dim_of(num_qubits)) {
        throw DimensionError("PureState::basis: index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return {num_qubits, std::move(v)};
}

DenseOperator::DenseOperator(int num_qubits, Matrix entries)
    : num_qubits_(num_qubits), m_(std::move(entries)) {
    check_register(num_qubits);
    const auto dim = static_cast<Eigen::Index>(dim_of(num_qubits));
    if (m_.rows() != dim || m_.cols() != dim) {
        throw DimensionError("DenseOperator: expected a " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " matrix");
    }
}

DenseOperator DenseOperator::identity(int num_qubits) {
    check_register(num_qubits);
    const auto dim = static_cast<Eigen::Index>(dim_of(num_qubits));
    return {num_qubits, Matrix::Identity(dim, dim)};
}

bool DenseOperator::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool DenseOperator::is_unitary(double tol) const {
    const Matrix gram = m_.adjoint() * m_;
    return (gram - Matrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool DenseOperator::is_density_operator(double tol) const {
    if (!is_hermitian(tol) || std::abs(m_.trace() - Complex{1.0}) > tol) {
        return false;
    }
    const auto eig = hermitian_spectrum(*this);
    return eig.back() >= -tol;
}

Bipartition::Bipartition(int total_qubits, std::vector<int> side_a)
    : total_(total_qubits), side_a_(std::move(side_a)) {
    if (total_ < 2) {
        throw DimensionError("Bipartition: need at least 2 qubits");
    }
    std::sort(side_a_.begin(), side_a_.end());
    if (std::adjacent_find(side_a_.begin(), side_a_.end()) != side_a_.end()) {
        throw DimensionError("Bipartition: duplicate qubit in side A");
    }
    if (side_a_.empty() || static_cast<int>(side_a_.size()) >= total_) {
        throw DimensionError("Bipartition: side A must be a nonempty strict subset");
    }
    if (side_a_.front() < 0 || side_a_.back() >= total_) {
        throw DimensionError("Bipartition: qubit index out of range");
    }
    for (int q = 0; q < total_; ++q) {
        if (!std::binary_search(side_a_.begin(), side_a_.end(), q)) {
            side_b_.push_back(q);
        }
    }
}

bool Bipartition::in_a(int qubit) const {
    return std::binary_search(side_a_.begin(), side_a_.end(), qubit);
}

std::vector<std::uint64_t> Bipartition::offsets_a() const {
    return scatter_offsets(total_, side_a_);
}

std::vector<std::uint64_t> Bipartition::offsets_b() const {
    return scatter_offsets(total_, side_b_);
}

std::string Bipartition::to_string() const {
    std::ostringstream os;
    auto emit = [&os](const std::vector<int> &side) {
        os << '{';
        for (std::size_t k = 0; k < side.size(); ++k) {
            os << (k ? "," : "") << side[k];
        }
        os << '}';
    };
    emit(side_a_);
    os << ':';
    emit(side_b_);
    return os.str();
}

std::vector<std::uint64_t> scatter_offsets(int num_qubits, const std::vector<int> &qubits) {
    const std::size_t count = dim_of(static_cast<int>(qubits.size()));
    const int k = static_cast<int>(qubits.size());
    std::vector<std::uint64_t> out(count, 0);
    for (std::size_t v = 0; v < count; ++v) {
        std::uint64_t x = 0;
        for (int b = 0; b < k; ++b) {
            // bit b of v (counted from the MSB of a k-bit word) goes to qubits[b]
            if ((v >> (k - 1 - b)) & 1U) {
                x |= std::uint64_t{1} << bit_position(num_qubits, qubits[b]);
            }
        }
        out[v] = x;
    }
    return out;
}

double SchmidtSpectrum::sum_of_squares() const {
    return std::accumulate(coefficients.begin(), coefficients.end(), 0.0,
                           [](double acc, double c) { return acc + c * c; });
}

ProbabilityVector::ProbabilityVector(std::vector<double> entries, double tol)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DimensionError("ProbabilityVector: empty");
    }
    double total = 0.0;
    for (double e : entries_) {
        if (e < -tol) {
            throw DimensionError("ProbabilityVector: negative entry");
        }
        total += e;
    }
    if (std::abs(total - 1.0) > tol) {
        throw DimensionError("ProbabilityVector: entries sum to " + std::to_string(total));
    }
}

std::vector<double> ProbabilityVector::sorted_decreasing() const {
    auto out = entries_;
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// ---------------------------------------------------------------------------
// Decompositions

Matrix reshape_to_cut(const PureState &state, const Bipartition &cut) {
    check_cut(state.num_qubits(), cut, "schmidt_decompose");
    const auto oa = cut.offsets_a();
    const auto ob = cut.offsets_b();
    Matrix m(static_cast<Eigen::Index>(oa.size()), static_cast<Eigen::Index>(ob.size()));
    const auto &amps = state.amplitudes();
    for (std::size_t j = 0; j < ob.size(); ++j) {
        for (std::size_t i = 0; i < oa.size(); ++i) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                amps[static_cast<Eigen::Index>(oa[i] | ob[j])];
        }
    }
    return m;
}

SchmidtSpectrum schmidt_decompose(const PureState &state, const Bipartition &cut) {
    return {singular_values(reshape_to_cut(state, cut)), state.norm()};
}

Matrix realign(const DenseOperator &op, const Bipartition &cut) {
    check_cut(op.num_qubits(), cut, "realign");
    const auto oa = cut.offsets_a();
    const auto ob = cut.offsets_b();
    const std::size_t da = oa.size();
    const std::size_t db = ob.size();
    Matrix r(static_cast<Eigen::Index>(da * da), static_cast<Eigen::Index>(db * db));
    const Matrix &m = op.matrix();
    for (std::size_t rb = 0; rb < db; ++rb) {
        for (std::size_t cb = 0; cb < db; ++cb) {
            const auto col = static_cast<Eigen::Index>(rb * db + cb);
            for (std::size_t ra = 0; ra < da; ++ra) {
                for (std::size_t ca = 0; ca < da; ++ca) {
                    r(static_cast<Eigen::Index>(ra * da + ca), col) =
                        m(static_cast<Eigen::Index>(oa[ra] | ob[rb]),
                          static_cast<Eigen::Index>(oa[ca] | ob[cb]));
                }
            }
        }
    }
    return r;
}

DenseOperator unrealign(const Matrix &realigned, const Bipartition &cut) {
    const auto oa = cut.offsets_a();
    const auto ob = cut.offsets_b();
    const std::size_t da = oa.size();
    const std::size_t db = ob.size();
    if (static_cast<std::size_t>(realigned.rows()) != da * da ||
        static_cast<std::size_t>(realigned.cols()) != db * db) {
        throw DimensionError("unrealign: shape does not match cut");
    }
    const auto dim = static_cast<Eigen::Index>(dim_of(cut.total_qubits()));
    Matrix m(dim, dim);
    for (std::size_t rb = 0; rb < db; ++rb) {
        for (std::size_t cb = 0; cb < db; ++cb) {
            const auto col = static_cast<Eigen::Index>(rb * db + cb);
            for (std::size_t ra = 0; ra < da; ++ra) {
                for (std::size_t ca = 0; ca < da; ++ca) {
                    m(static_cast<Eigen::Index>(oa[ra] | ob[rb]),
                      static_cast<Eigen::Index>(oa[ca] | ob[cb])) =
                        realigned(static_cast<Eigen::Index>(ra * da + ca), col);
                }
            }
        }
    }
    return {cut.total_qubits(), std::move(m)};
}

SchmidtSpectrum operator_schmidt_decompose(const DenseOperator &op, const Bipartition &cut) {
    check_cut(op.num_qubits(), cut, "operator_schmidt_decompose");
    return {singular_values(realign(op, cut)), op.matrix().norm()};
}

DenseOperator operator_schmidt_truncate(const DenseOperator &op, const Bipartition &cut,
                                        std::size_t rank) {
    const Matrix r = realign(op, cut);
    const auto max_rank = static_cast<std::size_t>(std::min(r.rows(), r.cols()));
    if (rank < 1 || rank > max_rank) {
        throw DimensionError("operator_schmidt_truncate: rank out of range");
    }
    Eigen::BDCSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto k = static_cast<Eigen::Index>(rank);
    const Matrix approx = svd.matrixU().leftCols(k) *
                          svd.singularValues().head(k).cast<Complex>().asDiagonal() *
                          svd.matrixV().leftCols(k).adjoint();
    return unrealign(approx, cut);
}

DenseOperator partial_trace(const DenseOperator &op, const std::vector<int> &traced) {
    const int n = op.num_qubits();
    std::vector<int> tr = traced;
    std::sort(tr.begin(), tr.end());
    tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
    if (tr.empty() || static_cast<int>(tr.size()) >= n) {
        throw DimensionError("partial_trace: traced set must be a nonempty strict subset");
    }
    if (tr.front() < 0 || tr.back() >= n) {
        throw DimensionError("partial_trace: qubit index out of range");
    }
    std::vector<int> kept;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(tr.begin(), tr.end(), q)) {
            kept.push_back(q);
        }
    }
    const auto ok = scatter_offsets(n, kept);
    const auto ot = scatter_offsets(n, tr);
    const Matrix &m = op.matrix();
    const auto dk = static_cast<Eigen::Index>(ok.size());
    Matrix out = Matrix::Zero(dk, dk);
    for (Eigen::Index c = 0; c < dk; ++c) {
        for (Eigen::Index r = 0; r < dk; ++r) {
            Complex acc{0.0, 0.0};
            for (auto t : ot) {
                acc += m(static_cast<Eigen::Index>(ok[r] | t), static_cast<Eigen::Index>(ok[c] | t));
            }
            out(r, c) = acc;
        }
    }
    return {static_cast<int>(kept.size()), std::move(out)};
}

DenseOperator reduced_on_a(const PureState &state, const Bipartition &cut) {
    const Matrix m = reshape_to_cut(state, cut);
    return {cut.n_a(), m * m.adjoint()};
}

DenseOperator reduced_on_b(const PureState &state, const Bipartition &cut) {
    const Matrix m = reshape_to_cut(state, cut);
    return {cut.n_b(), m.transpose() * m.conjugate()};
}

std::size_t rank_of(const SchmidtSpectrum &spectrum, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw DimensionError("rank_of: rel_tol must lie in (0, 1)");
    }
    double largest = 0.0;
    for (double c : spectrum.coefficients) {
        largest = std::max(largest, c);
    }
    if (largest == 0.0) {
        return 0;
    }
    const double threshold = rel_tol * largest;
    return static_cast<std::size_t>(std::count_if(spectrum.coefficients.begin(),
                                                  spectrum.coefficients.end(),
                                                  [threshold](double c) { return c > threshold; }));
}

double fidelity(const DenseOperator &o1, const DenseOperator &o2) {
    if (o1.num_qubits() != o2.num_qubits()) {
        throw DimensionError("fidelity: operand dimensions differ");
    }
    const double n1 = o1.matrix().norm();
    const double n2 = o2.matrix().norm();
    if (n1 == 0.0 || n2 == 0.0) {
        throw DimensionError("fidelity: zero-norm operand");
    }
    // Tr(A^dagger B) = sum conj(A_ij) B_ij
    const Complex numerator = o1.matrix().conjugate().cwiseProduct(o2.matrix()).sum();
    const double value = numerator.real() / (n1 * n2);
    if (o1.is_hermitian() && o2.is_hermitian() &&
        std::abs(numerator.imag()) / (n1 * n2) >= 1e-10) {
        throw std::logic_error("fidelity: Hermitian operands produced a complex overlap");
    }
    return value;
}

bool majorizes(const ProbabilityVector &q, const ProbabilityVector &p, double tol) {
    if (q.size() != p.size()) {
        throw DimensionError("majorizes: length mismatch");
    }
    const auto qs = q.sorted_decreasing();
    const auto ps = p.sorted_decreasing();
    double sum_p = 0.0;
    double sum_q = 0.0;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        sum_p += ps[k];
        sum_q += qs[k];
        if (sum_p > sum_q + tol) {
            return false;
        }
    }
    return std::abs(sum_p - sum_q) <= tol;
}

std::vector<double> hermitian_spectrum(const DenseOperator &op) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

DenseOperator qubit_permutation(const DenseOperator &op, const std::vector<int> &perm) {
    const auto map = permuted_indices(op.num_qubits(), perm);
    const auto dim = static_cast<Eigen::Index>(op.dimension());
    Matrix out(dim, dim);
    const Matrix &m = op.matrix();
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            out(static_cast<Eigen::Index>(map[r]), static_cast<Eigen::Index>(map[c])) = m(r, c);
        }
    }
    return {op.num_qubits(), std::move(out)};
}

PureState qubit_permutation(const PureState &state, const std::vector<int> &perm) {
    const auto map = permuted_indices(state.num_qubits(), perm);
    Vector out(state.amplitudes().size());
    for (std::size_t x = 0; x < map.size(); ++x) {
        out[static_cast<Eigen::Index>(map[x])] = state[x];
    }
    return {state.num_qubits(), std::move(out)};
}

Bipartition permute_cut(const Bipartition &cut, const std::vector<int> &perm) {
    if (!is_permutation(perm, cut.total_qubits())) {
        throw DimensionError("permute_cut: not a bijection on the register");
    }
    std::vector<int> side;
    for (int q : cut.side_a()) {
        side.push_back(perm[q]);
    }
    return {cut.total_qubits(), std::move(side)};
}

void apply_two_qubit_gate_inplace(Vector &amplitudes, int num_qubits, const Gate4 &gate, int q1,
                                  int q2) {
    if (q1 == q2) {
        throw DimensionError("apply_two_qubit_gate: coincident targets");
    }
    if (q1 < 0 || q2 < 0 || q1 >= num_qubits || q2 >= num_qubits) {
        throw DimensionError("apply_two_qubit_gate: target out of range");
    }
    if (static_cast<std::size_t>(amplitudes.size()) != dim_of(num_qubits)) {
        throw DimensionError("apply_two_qubit_gate: amplitude count mismatch");
    }
    // kernels take the gate row-major
    const Eigen::Matrix<Complex, 4, 4, Eigen::RowMajor> g = gate;
    kernels::apply_two_qubit(amplitudes.data(), dim_of(num_qubits), g.data(),
                             static_cast<unsigned>(bit_position(num_qubits, q1)),
                             static_cast<unsigned>(bit_position(num_qubits, q2)));
}

PureState apply_two_qubit_gate(const PureState &state, const Gate4 &gate, int q1, int q2) {
    const Matrix gram = gate.adjoint() * gate;
    if ((gram - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() > 1e-10) {
        throw DimensionError("apply_two_qubit_gate: gate is not unitary");
    }
    Vector amps = state.amplitudes();
    apply_two_qubit_gate_inplace(amps, state.num_qubits(), gate, q1, q2);
    return {state.num_qubits(), std::move(amps)};
}

} // namespace dqc1

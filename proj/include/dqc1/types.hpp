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
 * Value types shared by every module: state vectors, dense operators,
 * bipartitions, Schmidt spectra and probability vectors.
 *
 * Qubit 0 is the most significant bit of an amplitude index. For an
 * n-qubit register qubit q lives at bit position n - 1 - q.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dqc1 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Gate4 = Eigen::Matrix4cd;

/// Raised on register/cut/shape mismatches and out-of-range arguments.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a size limit for dense materialization is exceeded.
class SizeLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A numerical check of a claimed property failed (not a usage error).
class ClaimFalsified : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t dim_of(int num_qubits) {
    return std::size_t{1} << num_qubits;
}

inline constexpr int bit_position(int num_qubits, int qubit) {
    return num_qubits - 1 - qubit;
}

class PureState {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit PureState(int num_qubits);
    PureState(int num_qubits, Vector amplitudes);

    static PureState basis(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return dim_of(num_qubits_); }
    const Vector &amplitudes() const { return amps_; }
    Vector &amplitudes() { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
    double norm() const { return amps_.norm(); }

  private:
    int num_qubits_;
    Vector amps_;
};

class DenseOperator {
  public:
    DenseOperator(int num_qubits, Matrix entries);

    static DenseOperator identity(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return dim_of(num_qubits_); }
    const Matrix &matrix() const { return m_; }
    Matrix &matrix() { return m_; }
    Complex operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    DenseOperator adjoint() const { return {num_qubits_, m_.adjoint()}; }
    Complex trace() const { return m_.trace(); }

    bool is_hermitian(double tol = 1e-10) const;
    /// max-entry deviation of U^dagger U from identity is at most tol
    bool is_unitary(double tol = 1e-10) const;
    /// Hermitian, unit trace, eigenvalues >= -tol
    bool is_density_operator(double tol = 1e-10) const;

  private:
    int num_qubits_;
    Matrix m_;
};

/// A:B cut of a register. side_b is the complement of side_a.
class Bipartition {
  public:
    Bipartition(int total_qubits, std::vector<int> side_a);

    int total_qubits() const { return total_; }
    const std::vector<int> &side_a() const { return side_a_; }
    const std::vector<int> &side_b() const { return side_b_; }
    int n_a() const { return static_cast<int>(side_a_.size()); }
    int n_b() const { return static_cast<int>(side_b_.size()); }
    int n_0() const { return n_a() < n_b() ? n_a() : n_b(); }
    std::size_t d_a() const { return dim_of(n_a()); }
    std::size_t d_b() const { return dim_of(n_b()); }
    bool in_a(int qubit) const;

    /// Same cut with the roles of A and B exchanged.
    Bipartition swapped() const { return {total_, side_b_}; }

    /// offsets_a()[i] | offsets_b()[j] is the register index whose A-side
    /// bits spell i and B-side bits spell j (lowest-numbered qubit first).
    std::vector<std::uint64_t> offsets_a() const;
    std::vector<std::uint64_t> offsets_b() const;

    std::string to_string() const;

    bool operator==(const Bipartition &other) const = default;

  private:
    int total_;
    std::vector<int> side_a_;
    std::vector<int> side_b_;
};

/// Index offsets obtained by scattering the bits of 0..2^|qubits|-1 onto the
/// bit positions of `qubits` within an n-qubit register.
std::vector<std::uint64_t> scatter_offsets(int num_qubits, const std::vector<int> &qubits);

struct SchmidtSpectrum {
    /// sorted decreasing, nonnegative
    std::vector<double> coefficients;
    double source_norm = 0.0;

    std::size_t size() const { return coefficients.size(); }
    double largest() const { return coefficients.empty() ? 0.0 : coefficients.front(); }
    double sum_of_squares() const;
};

class ProbabilityVector {
  public:
    explicit ProbabilityVector(std::vector<double> entries, double tol = 1e-12);

    const std::vector<double> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    std::vector<double> sorted_decreasing() const;

  private:
    std::vector<double> entries_;
};

} // namespace dqc1

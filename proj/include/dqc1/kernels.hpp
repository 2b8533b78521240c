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
 * Two-qubit gate contraction kernels.
 *
 * A scalar reference kernel and an AVX2/FMA kernel share one contract; the
 * active backend is chosen once at startup from CPUID (override with the
 * DQC1_KERNEL environment variable, `scalar` or `avx2`).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace dqc1::kernels {

enum class Backend { Scalar, Avx2 };

/// Contract shared by the backends:
///   amps      : 2^n contiguous amplitudes, updated in place
///   gate      : 16 row-major entries, basis |b_hi b_lo>
///   pos_hi    : bit position of the gate's high target, pos_hi > pos_lo
///   pos_lo    : bit position of the gate's low target
using TwoQubitKernel = void (*)(std::complex<double> *amps, std::size_t dim,
                                const std::complex<double> *gate, unsigned pos_hi,
                                unsigned pos_lo);

void apply_two_qubit_scalar(std::complex<double> *amps, std::size_t dim,
                            const std::complex<double> *gate, unsigned pos_hi, unsigned pos_lo);

/// Only callable when avx2_supported() is true.
void apply_two_qubit_avx2(std::complex<double> *amps, std::size_t dim,
                          const std::complex<double> *gate, unsigned pos_hi, unsigned pos_lo);

/// Compiled in and supported by the running CPU.
bool avx2_supported();

Backend active_backend();
/// Throws std::invalid_argument if the backend is not supported here.
void set_backend(Backend backend);
std::string_view backend_name(Backend backend);

/// Dispatches to the active backend. Accepts targets in either order.
void apply_two_qubit(std::complex<double> *amps, std::size_t dim,
                     const std::complex<double> *gate, unsigned pos_first, unsigned pos_second);

} // namespace dqc1::kernels

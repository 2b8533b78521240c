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

#include "dqc1/kernels.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dqc1::kernels {

namespace {

bool detect_avx2() {
#if defined(DQC1_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() {
    const bool avx2 = detect_avx2();
    if (const char *env = std::getenv("DQC1_KERNEL")) {
        const std::string want(env);
        if (want == "scalar") {
            return Backend::Scalar;
        }
        if (want == "avx2" && avx2) {
            return Backend::Avx2;
        }
    }
    return avx2 ? Backend::Avx2 : Backend::Scalar;
}

Backend &backend_slot() {
    static Backend backend = initial_backend();
    return backend;
}

} // namespace

bool avx2_supported() {
    static const bool supported = detect_avx2();
    return supported;
}

Backend active_backend() { return backend_slot(); }

void set_backend(Backend backend) {
    if (backend == Backend::Avx2 && !avx2_supported()) {
        throw std::invalid_argument("AVX2 kernel is not available on this CPU/build");
    }
    backend_slot() = backend;
}

std::string_view backend_name(Backend backend) {
    return backend == Backend::Avx2 ? "avx2" : "scalar";
}

void apply_two_qubit(std::complex<double> *amps, std::size_t dim,
                     const std::complex<double> *gate, unsigned pos_first, unsigned pos_second) {
    const TwoQubitKernel kernel =
        active_backend() == Backend::Avx2 ? apply_two_qubit_avx2 : apply_two_qubit_scalar;
    if (pos_first > pos_second) {
        kernel(amps, dim, gate, pos_first, pos_second);
        return;
    }
    // relabel the gate basis |b1 b2> -> |b2 b1> so the high target comes first
    static constexpr std::array<int, 4> swap_bits{0, 2, 1, 3};
    std::array<std::complex<double>, 16> g{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            g[static_cast<std::size_t>(swap_bits[r] * 4 + swap_bits[c])] = gate[r * 4 + c];
        }
    }
    kernel(amps, dim, g.data(), pos_second, pos_first);
}

} // namespace dqc1::kernels

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

#include <stdexcept>

#if defined(DQC1_BUILD_AVX2)
#include <immintrin.h>
#endif

namespace dqc1::kernels {

#if defined(DQC1_BUILD_AVX2)

namespace {

// Each __m256d holds two complex<double> as [re0, im0, re1, im1].

// (gr + i gi) * a, coefficients broadcast per complex lane
inline __m256d cmul(__m256d gr, __m256d gi, __m256d a) {
    const __m256d a_swapped = _mm256_permute_pd(a, 0b0101);
    return _mm256_fmaddsub_pd(gr, a, _mm256_mul_pd(gi, a_swapped));
}

inline __m256d cfma(__m256d gr, __m256d gi, __m256d a, __m256d acc) {
    return _mm256_add_pd(acc, cmul(gr, gi, a));
}

inline __m256d swap_lanes(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x01); }

struct LaneCoeff {
    __m256d re;
    __m256d im;
};

inline LaneCoeff broadcast(std::complex<double> g) {
    return {_mm256_set1_pd(g.real()), _mm256_set1_pd(g.imag())};
}

// lane 0 gets g0, lane 1 gets g1
inline LaneCoeff pair(std::complex<double> g0, std::complex<double> g1) {
    return {_mm256_setr_pd(g0.real(), g0.real(), g1.real(), g1.real()),
            _mm256_setr_pd(g0.imag(), g0.imag(), g1.imag(), g1.imag())};
}

inline double *as_doubles(std::complex<double> *p) { return reinterpret_cast<double *>(p); }

// Neither target is bit 0: groups k and k+1 sit in adjacent memory for all
// four gate offsets, so one vector carries the same gate slot of two groups.
void kernel_vector_groups(std::complex<double> *amps, std::size_t dim,
                          const std::complex<double> *gate, unsigned pos_hi, unsigned pos_lo) {
    LaneCoeff g[16];
    for (int e = 0; e < 16; ++e) {
        g[e] = broadcast(gate[e]);
    }
    const std::size_t bit_hi = std::size_t{1} << pos_hi;
    const std::size_t bit_lo = std::size_t{1} << pos_lo;
    const std::size_t mask_lo = bit_lo - 1;
    const std::size_t mask_hi = bit_hi - 1;
    const std::size_t groups = dim >> 2;
    for (std::size_t k = 0; k < groups; k += 2) {
        std::size_t x = ((k & ~mask_lo) << 1) | (k & mask_lo);
        x = ((x & ~mask_hi) << 1) | (x & mask_hi);
        double *p[4] = {as_doubles(amps + x), as_doubles(amps + (x | bit_lo)),
                        as_doubles(amps + (x | bit_hi)), as_doubles(amps + (x | bit_hi | bit_lo))};
        const __m256d a0 = _mm256_loadu_pd(p[0]);
        const __m256d a1 = _mm256_loadu_pd(p[1]);
        const __m256d a2 = _mm256_loadu_pd(p[2]);
        const __m256d a3 = _mm256_loadu_pd(p[3]);
        for (int r = 0; r < 4; ++r) {
            const LaneCoeff *row = g + 4 * r;
            __m256d acc = cmul(row[0].re, row[0].im, a0);
            acc = cfma(row[1].re, row[1].im, a1, acc);
            acc = cfma(row[2].re, row[2].im, a2, acc);
            acc = cfma(row[3].re, row[3].im, a3, acc);
            _mm256_storeu_pd(p[r], acc);
        }
    }
}

// Low target is bit 0: one vector holds slots (h,0),(h,1) of a single group.
// Output pair h is built from both input pairs and their lane swaps with
// per-lane coefficients.
void kernel_low_bit(std::complex<double> *amps, std::size_t dim,
                    const std::complex<double> *gate, unsigned pos_hi) {
    auto at = [gate](int r, int c) { return gate[r * 4 + c]; };
    LaneCoeff c[2][4];
    for (int h = 0; h < 2; ++h) {
        const int r0 = 2 * h;
        const int r1 = 2 * h + 1;
        c[h][0] = pair(at(r0, 0), at(r1, 1));
        c[h][1] = pair(at(r0, 1), at(r1, 0));
        c[h][2] = pair(at(r0, 2), at(r1, 3));
        c[h][3] = pair(at(r0, 3), at(r1, 2));
    }
    const std::size_t bit_hi = std::size_t{1} << pos_hi;
    const std::size_t mask_hi = bit_hi - 1;
    const std::size_t groups = dim >> 2;
    for (std::size_t k = 0; k < groups; ++k) {
        std::size_t x = k << 1;
        x = ((x & ~mask_hi) << 1) | (x & mask_hi);
        double *p0 = as_doubles(amps + x);
        double *p1 = as_doubles(amps + (x | bit_hi));
        const __m256d v0 = _mm256_loadu_pd(p0);
        const __m256d v1 = _mm256_loadu_pd(p1);
        const __m256d s0 = swap_lanes(v0);
        const __m256d s1 = swap_lanes(v1);
        double *out[2] = {p0, p1};
        for (int h = 0; h < 2; ++h) {
            __m256d acc = cmul(c[h][0].re, c[h][0].im, v0);
            acc = cfma(c[h][1].re, c[h][1].im, s0, acc);
            acc = cfma(c[h][2].re, c[h][2].im, v1, acc);
            acc = cfma(c[h][3].re, c[h][3].im, s1, acc);
            _mm256_storeu_pd(out[h], acc);
        }
    }
}

} // namespace

void apply_two_qubit_avx2(std::complex<double> *amps, std::size_t dim,
                          const std::complex<double> *gate, unsigned pos_hi, unsigned pos_lo) {
    if (pos_lo == 0) {
        kernel_low_bit(amps, dim, gate, pos_hi);
    } else {
        kernel_vector_groups(amps, dim, gate, pos_hi, pos_lo);
    }
}

#else

void apply_two_qubit_avx2(std::complex<double> *, std::size_t, const std::complex<double> *,
                          unsigned, unsigned) {
    throw std::logic_error("apply_two_qubit_avx2: not compiled for this target");
}

#endif

} // namespace dqc1::kernels

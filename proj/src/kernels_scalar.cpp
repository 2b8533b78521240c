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

namespace dqc1::kernels {

void apply_two_qubit_scalar(std::complex<double> *amps, std::size_t dim,
                            const std::complex<double> *gate, unsigned pos_hi, unsigned pos_lo) {
    const std::size_t bit_hi = std::size_t{1} << pos_hi;
    const std::size_t bit_lo = std::size_t{1} << pos_lo;
    const std::size_t mask_lo = bit_lo - 1;
    const std::size_t mask_hi = bit_hi - 1;
    const std::size_t groups = dim >> 2;
    for (std::size_t k = 0; k < groups; ++k) {
        std::size_t x = ((k & ~mask_lo) << 1) | (k & mask_lo);
        x = ((x & ~mask_hi) << 1) | (x & mask_hi);
        const std::size_t idx[4] = {x, x | bit_lo, x | bit_hi, x | bit_hi | bit_lo};
        const std::complex<double> a[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            const std::complex<double> *row = gate + 4 * r;
            amps[idx[r]] = row[0] * a[0] + row[1] * a[1] + row[2] * a[2] + row[3] * a[3];
        }
    }
}

} // namespace dqc1::kernels

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
 * Text formats: CMAT v1 complex matrices and circuit spec files.
 *
 * CMAT v1:
 *   CMAT v1 <rows> <cols>
 *   <re> <im>            (rows*cols lines, row-major, 17 significant digits)
 *
 * Circuit spec: one gate per line, `q1 q2` then 16 `re im` pairs of the
 * row-major 4x4 matrix. Blank lines and lines starting with '#' are ignored.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "dqc1/randomness.hpp"
#include "dqc1/types.hpp"

namespace dqc1 {

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// %.17g
std::string format_double(double value);

void write_cmat(std::ostream &out, const Matrix &m);
Matrix read_cmat(std::istream &in);

void write_circuit(std::ostream &out, const Circuit &circuit);
/// num_qubits defaults to max target + 1.
Circuit read_circuit(std::istream &in, std::optional<int> num_qubits = std::nullopt);

} // namespace dqc1

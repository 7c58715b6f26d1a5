// Copyright 2026 The rotkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "rotkit/euler_decomp.hpp"
#include "rotkit/fidelity.hpp"

// The built-in reference table: two-axis decompositions of the named gates
// for kappa in {inf, 100, 50, 10, 5, 1}, with the error E0 that results when
// the orthogonal-frame angles are replayed on tilted hardware.
namespace rotkit::table {

// Golden reference values (angles in units of pi, rounded to four decimals;
// E0 in percent).  A row with fewer than four angles leaves the tail zero.
struct ReferenceRow {
    const char* gate;
    double kappa;  // inf for the orthogonal frame
    std::array<double, 4> angles_pi;
    int n_angles;
    double e0_percent;
};

const std::vector<ReferenceRow>& reference_rows();

enum class AngleMatch {
    Direct,      // digit-for-digit (circular, +-1 in the 4th decimal)
    Equivalent,  // different presentation; the reference row realizes the
                 // same rotation exactly
    Mismatch,
};

struct ComputedRow {
    std::string gate;
    double kappa = 0.0;
    transfer::EulerSequence sequence;       // full precision
    std::vector<double> angles_pi;          // dense H,G,H,G,... grid
    double e0 = 0.0;                        // error fraction
    double fidelity_full = 1.0;             // reconstruction, full precision
    double fidelity_truncated = 1.0;        // reconstruction, digits decimals
    AngleMatch match = AngleMatch::Direct;
    double e0_delta = 0.0;                  // |computed - reference| fraction
    bool flagged = false;                   // any cell off by > 1 unit in the
                                            // 4th decimal (angles or E0)
};

// Round an angle sequence to `digits` decimals in units of pi.
transfer::EulerSequence truncate_angles(const transfer::EulerSequence& seq, int digits);

// Expand a sequence onto the alternating H,G,H,G,... grid (units of pi).
std::vector<double> dense_angles(const transfer::EulerSequence& seq, std::size_t min_len);

// Compute one row (decomposition over the kappa frame, E0 against the
// reference, truncated-angle fidelity) and compare with the golden values.
ComputedRow compute_row(const ReferenceRow& ref, int digits = 4);

// All rows, in table order.
std::vector<ComputedRow> compute_table(int digits = 4);

}  // namespace rotkit::table

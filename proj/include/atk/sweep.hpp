#pragma once

#include <array>
#include <cstdint>

namespace atk {

// Aggregates of the exhaustive length-9 classification sweep over all
// cycles with entries in [2,5]. The checksum folds each definite cycle's
// entry hash against its alignment-orbit count so that any change in the
// per-cycle results is detectable.
struct SweepResult {
    std::int64_t total = 0;
    std::int64_t definite = 0;
    std::array<std::int64_t, 4> u_hist{}; // indexed by orbit count 1..3
    int max_u = 0;
    std::int64_t checksum = 0;

    bool operator==(const SweepResult&) const = default;
};

// Plain-integer kernel; the parallel flag selects the OpenMP variant,
// which must produce bit-identical aggregates.
SweepResult sweep_length9(bool parallel = false);

// Orbit count of the 18 dihedral alignments of one length-9 cycle under
// cycle symmetries on the left and the realized model symmetries on the
// right. Exposed so the arbitrary-precision classifier can be checked
// against the sweep kernel.
int alignment_orbits_length9(const std::array<int, 9>& entries);

} // namespace atk

#pragma once

#include <utility>
#include <vector>

#include "atk/cycle.hpp"
#include "atk/int_linalg.hpp"

namespace atk {

// Complete smooth fan in Z^2: primitive rays in counterclockwise order,
// adjacent determinants all +1, total winding exactly 1. Stored normalized
// with rays[0] = (1,0) and rays[1] = (0,1); two fans are equal iff their
// normalized ray lists are equal.
class Fan {
public:
    explicit Fan(std::vector<LatticeVector> rays);

    const std::vector<LatticeVector>& rays() const { return rays_; }
    int size() const { return static_cast<int>(rays_.size()); }

    bool operator==(const Fan&) const = default;

private:
    std::vector<LatticeVector> rays_;
};

// Number of full turns of a cyclic ray sequence, counted as the number of
// wraps past the positive x-axis under an exact angular comparator.
int winding_number(const std::vector<LatticeVector>& rays);

// Build the fan with v_0 = (1,0), v_1 = (0,1), v_{i+1} = a_i v_i - v_{i-1}.
// Throws NotToric when the recurrence fails to close up with winding 1.
Fan fan_from_cycle(const Cycle& c);

// Read a_i off the relation v_{i-1} + v_{i+1} = a_i v_i at every ray.
Cycle cycle_from_fan(const Fan& f);

// Insert v_i + v_{i+1} between rays i and i+1 (indices mod n).
Fan corner_blowup(const Fan& f, int i);

// Remove ray i; requires v_{i-1} + v_{i+1} = v_i (a -1 component).
Fan corner_blowdown(const Fan& f, int i);

bool are_opposite(const Fan& f, int i, int j);

struct FanSymmetry {
    DihedralElement action; // induced permutation of ray labels
    Mat2 map;               // unimodular matrix realizing it

    bool operator==(const FanSymmetry&) const = default;
};

// All unimodular maps permuting the ray set, each paired with its induced
// dihedral relabeling: map * rays[i] = rays[action(i)] for every i.
std::vector<FanSymmetry> fan_symmetries(const Fan& f);

} // namespace atk

#pragma once

#include <vector>

#include "atk/cycle.hpp"
#include "atk/marked_pair.hpp"

namespace atk {

// Subgroup of the dihedral group that acts on a standard model by
// self-maps preserving its deformation class: generated by a model-specific
// rotation together with the reflections realized as lattice symmetries of
// the model's fan.
struct RealizedSymmetry {
    int n = 0;
    std::vector<DihedralElement> subgroup; // sorted, rotations first
};

const RealizedSymmetry& realized_subgroup(ModelName model);

// One way of presenting a cycle as a standard model with interior marks:
// align the model's labeled cycle to the input by a dihedral element and
// absorb the difference into marks.
struct Presentation {
    ModelName model;
    DihedralElement alignment;
    std::vector<Int> marks;
    GroupInvariants pi1;
};

// All feasible (model, alignment, marks) triples for a negative definite
// cycle of length 6..9 whose entries are all at least 2.
// Throws LengthOutOfRange / NotNegativeDefinite otherwise.
std::vector<Presentation> feasible_presentations(const Cycle& c);

// Orbits of the feasible alignments for one model under
// sigma ~ s . sigma . r with s a symmetry of the cycle and r in the
// model's realized subgroup.
int orbit_upper_bound(const Cycle& c, ModelName model);

// Count of deformation types for the cycle: exact for lengths 6..8,
// an interval [1, hi] for length 9 where only the upper bound is proven.
struct TypeCount {
    int lo = 0;
    int hi = 0;
    std::vector<Presentation> representatives;
    bool exact() const { return lo == hi; }
};

TypeCount deformation_types(const Cycle& c);

} // namespace atk

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "atk/int_linalg.hpp"

namespace atk {

// Cyclic list of integers a_i = -D_i^2 (negated self-intersections of the
// boundary components). Minimum length 3.
using Cycle = std::vector<Int>;

void validate_cycle(const Cycle& c);

struct PairInvariants {
    Int d_squared;
    Int charge;
    Int euler_complement;
    std::optional<Int> lambda_rank; // charge - 2, present only when negative definite

    bool operator==(const PairInvariants&) const = default;
};

// Element of the dihedral group of order 2n acting on labels 0..n-1:
// (k, false) sends i to i + k, (k, true) sends i to k - i (mod n).
struct DihedralElement {
    int rotation = 0;
    bool reflected = false;

    bool operator==(const DihedralElement&) const = default;
    bool operator<(const DihedralElement& o) const {
        if (reflected != o.reflected) return !reflected;
        return rotation < o.rotation;
    }
};

int dihedral_image(const DihedralElement& g, int n, int i);
// (a compose b)(i) = a(b(i))
DihedralElement dihedral_compose(int n, const DihedralElement& a, const DihedralElement& b);
DihedralElement dihedral_inverse(int n, const DihedralElement& g);
// Rotations by 0..n-1 first, then reflections by 0..n-1.
std::vector<DihedralElement> dihedral_elements(int n);

// Relabeling action: result[i] = c[g(i)].
Cycle apply(const DihedralElement& g, const Cycle& c);

PairInvariants invariants_of(const Cycle& c);

// Diagonal -a_i, ones on cyclic neighbors, zero elsewhere.
std::vector<std::vector<Int>> intersection_matrix(const Cycle& c);

// Determinant of the full intersection matrix, computed exactly.
Int intersection_determinant(const Cycle& c);

// True iff (-1)^k det(leading k x k minor) > 0 for all k.
bool is_negative_definite(const Cycle& c);

// Lexicographically least relabeling over all 2n dihedral images, plus the
// first element achieving it (in dihedral_elements order). Idempotent.
std::pair<Cycle, DihedralElement> dihedral_canonical(const Cycle& c);

std::vector<DihedralElement> symmetry_group(const Cycle& c);

bool dihedral_equal(const Cycle& a, const Cycle& b);

} // namespace atk

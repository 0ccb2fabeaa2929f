#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "atk/errors.hpp"

namespace atk {

// All arithmetic in the library is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

struct LatticeVector {
    Int x;
    Int y;

    bool operator==(const LatticeVector&) const = default;
};

inline LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y};
}
inline LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y};
}
inline LatticeVector operator-(const LatticeVector& a) {
    return {-a.x, -a.y};
}
inline LatticeVector operator*(const Int& s, const LatticeVector& v) {
    return {s * v.x, s * v.y};
}
inline bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Int det2(const LatticeVector& v, const LatticeVector& w);

// True iff gcd(|x|, |y|) == 1. Throws ZeroVector on (0,0).
bool is_primitive(const LatticeVector& v);

// 2x2 integer matrix [[a, b], [c, d]] acting by (x, y) -> (a x + b y, c x + d y).
struct Mat2 {
    Int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 from_columns(const LatticeVector& u, const LatticeVector& w) {
        return {u.x, w.x, u.y, w.y};
    }

    Int det() const { return a * d - b * c; }

    LatticeVector apply(const LatticeVector& v) const {
        return {a * v.x + b * v.y, c * v.x + d * v.y};
    }

    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    // Exact inverse for det = +-1; since det^2 = 1, the inverse is det * adj.
    Mat2 inverse_unimodular() const {
        Int s = det();
        return {s * d, s * -b, s * -c, s * a};
    }

    bool operator==(const Mat2&) const = default;
};

// Free rank plus invariant-factor list of a finitely generated abelian group.
// Torsion entries are >= 2 and form a divisibility chain d1 | d2 | ...
struct GroupInvariants {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const GroupInvariants&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Invariants of Z^2 / column-span of a 2-row integer matrix. The empty
// column set is allowed and yields free rank 2.
GroupInvariants smith_normal_form(const std::vector<std::vector<Int>>& rows);

// Convenience: same computation with the generators given as vectors.
GroupInvariants cokernel_invariants(const std::vector<LatticeVector>& generators);

} // namespace atk

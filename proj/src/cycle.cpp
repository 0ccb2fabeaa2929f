#include "atk/cycle.hpp"

#include <algorithm>
#include <cstddef>

namespace atk {

void validate_cycle(const Cycle& c) {
    if (c.size() < 3)
        fail(errc::length_out_of_range,
             "cycle length " + std::to_string(c.size()) + " is below the minimum of 3");
}

int dihedral_image(const DihedralElement& g, int n, int i) {
    int v = g.reflected ? g.rotation - i : g.rotation + i;
    v %= n;
    if (v < 0)
        v += n;
    return v;
}

DihedralElement dihedral_compose(int n, const DihedralElement& a, const DihedralElement& b) {
    int k;
    bool r;
    if (!a.reflected) {
        k = a.rotation + b.rotation;
        r = b.reflected;
    } else {
        k = a.rotation - b.rotation;
        r = !b.reflected;
    }
    k %= n;
    if (k < 0)
        k += n;
    return {k, r};
}

DihedralElement dihedral_inverse(int n, const DihedralElement& g) {
    if (g.reflected)
        return g; // reflections are involutions
    return {g.rotation == 0 ? 0 : n - g.rotation, false};
}

std::vector<DihedralElement> dihedral_elements(int n) {
    std::vector<DihedralElement> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.push_back({k, false});
    for (int k = 0; k < n; ++k)
        out.push_back({k, true});
    return out;
}

Cycle apply(const DihedralElement& g, const Cycle& c) {
    const int n = static_cast<int>(c.size());
    Cycle out(c.size());
    for (int i = 0; i < n; ++i)
        out[i] = c[dihedral_image(g, n, i)];
    return out;
}

PairInvariants invariants_of(const Cycle& c) {
    validate_cycle(c);
    Int sum = 0;
    for (const Int& a : c)
        sum += a;
    const Int n = static_cast<long>(c.size());
    PairInvariants inv;
    inv.d_squared = 2 * n - sum; // each component meets its two neighbors once
    inv.charge = 12 - inv.d_squared - n;
    inv.euler_complement = inv.charge;
    if (is_negative_definite(c))
        inv.lambda_rank = inv.charge - 2;
    return inv;
}

std::vector<std::vector<Int>> intersection_matrix(const Cycle& c) {
    validate_cycle(c);
    const std::size_t n = c.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = -c[i];
        m[i][(i + 1) % n] = 1;
        m[(i + 1) % n][i] = 1;
    }
    return m;
}

namespace {

// Determinant of the tridiagonal block with diagonal -a[lo..hi) and unit
// off-diagonal entries: D_k = -a_k D_{k-1} - D_{k-2}, D_0 = 1, D_{-1} = 0.
Int path_determinant(const Cycle& a, std::size_t lo, std::size_t hi) {
    Int prev = 0;
    Int cur = 1;
    for (std::size_t i = lo; i < hi; ++i) {
        Int next = -a[i] * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

Int intersection_determinant(const Cycle& c) {
    validate_cycle(c);
    const std::size_t n = c.size();
    // Cyclic tridiagonal with unit corners: expand along the corner entries.
    Int t = path_determinant(c, 0, n);
    Int p = path_determinant(c, 1, n - 1);
    Int sign = (n % 2 == 0) ? -2 : 2;
    return t - p + sign;
}

bool is_negative_definite(const Cycle& c) {
    validate_cycle(c);
    const std::size_t n = c.size();
    // Leading minors of the cyclic matrix: every proper leading block is a
    // path block (the corner entries only enter at k = n).
    Int prev = 0;
    Int cur = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Int next = -c[k - 1] * cur - prev;
        prev = cur;
        cur = next;
        bool positive = (k % 2 == 0) ? cur > 0 : cur < 0;
        if (!positive)
            return false;
    }
    Int full = intersection_determinant(c);
    return (n % 2 == 0) ? full > 0 : full < 0;
}

std::pair<Cycle, DihedralElement> dihedral_canonical(const Cycle& c) {
    validate_cycle(c);
    const int n = static_cast<int>(c.size());
    Cycle best = c;
    DihedralElement best_g{0, false};
    bool have = false;
    for (const DihedralElement& g : dihedral_elements(n)) {
        Cycle img = apply(g, c);
        if (!have || std::lexicographical_compare(img.begin(), img.end(), best.begin(), best.end())) {
            best = std::move(img);
            best_g = g;
            have = true;
        }
    }
    return {best, best_g};
}

std::vector<DihedralElement> symmetry_group(const Cycle& c) {
    validate_cycle(c);
    const int n = static_cast<int>(c.size());
    std::vector<DihedralElement> out;
    for (const DihedralElement& g : dihedral_elements(n))
        if (apply(g, c) == c)
            out.push_back(g);
    return out;
}

bool dihedral_equal(const Cycle& a, const Cycle& b) {
    if (a.size() != b.size())
        return false;
    return dihedral_canonical(a).first == dihedral_canonical(b).first;
}

} // namespace atk

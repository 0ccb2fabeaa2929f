#include "atk/int_linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>

namespace atk {

Int det2(const LatticeVector& v, const LatticeVector& w) {
    return v.x * w.y - v.y * w.x;
}

bool is_primitive(const LatticeVector& v) {
    if (v.x == 0 && v.y == 0)
        fail(errc::zero_vector, "the zero vector has no primitive direction");
    return boost::multiprecision::gcd(abs(v.x), abs(v.y)) == 1;
}

namespace {

// Diagonalization by elementary row/column operations. The pivot is always
// the nonzero entry of smallest absolute value, ties broken by lowest
// row-major index, which makes the reduction deterministic.
std::vector<Int> diagonalize(std::vector<std::vector<Int>> m) {
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows == 0 ? 0 : m[0].size();
    std::vector<Int> diag;

    std::size_t t = 0;
    while (t < nrows && t < ncols) {
        // Select pivot in the trailing submatrix.
        bool found = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = t; i < nrows; ++i) {
            for (std::size_t j = t; j < ncols; ++j) {
                if (m[i][j] == 0)
                    continue;
                if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found)
            break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < nrows; ++i)
            std::swap(m[i][t], m[i][pj]);

        // Clear row t and column t; each reduction shrinks |pivot| or a
        // remainder, so this terminates.
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < nrows; ++i) {
                if (m[i][t] == 0)
                    continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < ncols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    // Remainder is smaller than the pivot: promote it.
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < ncols; ++j) {
                if (m[t][j] == 0)
                    continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < nrows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < nrows; ++i)
                        std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Divisibility fix-up: the pivot must divide every remaining
            // entry; fold an offending column into column t and repeat.
            bool fixed = true;
            for (std::size_t i = t + 1; i < nrows && fixed; ++i) {
                for (std::size_t j = t + 1; j < ncols && fixed; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t r = 0; r < nrows; ++r)
                            m[r][t] += m[r][j];
                        fixed = false;
                    }
                }
            }
            if (fixed)
                break;
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

} // namespace

GroupInvariants smith_normal_form(const std::vector<std::vector<Int>>& rows) {
    if (rows.size() != 2)
        fail(errc::length_out_of_range, "expected a 2-row matrix of generators");
    if (rows[0].size() != rows[1].size())
        fail(errc::length_mismatch, "matrix rows have different lengths");

    std::vector<Int> diag = diagonalize(rows);
    GroupInvariants g;
    g.free_rank = 2 - static_cast<int>(diag.size());
    for (const Int& d : diag)
        if (d > 1)
            g.torsion.push_back(d);
    return g;
}

GroupInvariants cokernel_invariants(const std::vector<LatticeVector>& generators) {
    std::vector<std::vector<Int>> rows(2);
    for (const LatticeVector& v : generators) {
        rows[0].push_back(v.x);
        rows[1].push_back(v.y);
    }
    return smith_normal_form(rows);
}

} // namespace atk

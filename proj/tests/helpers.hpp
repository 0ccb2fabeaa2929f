#pragma once

// Shared test utilities: deterministic generators plus independent
// reference implementations (rational pivots, triangular lattice bases,
// coset enumeration) used to cross-check the library code.

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <sys/wait.h>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "atk/fan.hpp"
#include "atk/transform.hpp"

namespace atk_test {

using atk::Cycle;
using atk::Int;
using atk::LatticeVector;
using Rat = boost::rational<Int>;

// Toric cycle of length n built by random corner blowups from the
// projective-plane fan; every output admits a fan by construction.
inline Cycle random_toric_cycle(std::mt19937& gen, int n) {
    atk::Fan f({{1, 0}, {0, 1}, {-1, -1}});
    while (f.size() < n) {
        std::uniform_int_distribution<int> pick(0, f.size() - 1);
        f = atk::corner_blowup(f, pick(gen));
    }
    return atk::cycle_from_fan(f);
}

inline std::vector<atk::Move> valid_moves(const Cycle& c) {
    std::vector<atk::Move> out;
    atk::Fan f = atk::fan_from_cycle(c);
    const int n = f.size();
    for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d)
            if (b != d && atk::are_opposite(f, b, d))
                out.push_back({b, d});
    return out;
}

inline Int quad_form(const Cycle& c, const std::vector<Int>& x) {
    const std::size_t n = c.size();
    Int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += -c[i] * x[i] * x[i];
        total += 2 * x[i] * x[(i + 1) % n];
    }
    return total;
}

struct DefiniteCheck {
    bool negative_definite = false;
    std::vector<Int> witness; // nonzero x with x^T M x >= 0 when indefinite
};

// Reference definiteness test by exact rational pivoting. When a pivot
// fails to be negative it is converted into an explicit integer vector
// certifying x^T M x >= 0.
inline DefiniteCheck rational_definiteness(const Cycle& c) {
    const int n = static_cast<int>(c.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        a[i][i] = Rat(-c[i]);
        a[i][(i + 1) % n] += 1;
        a[(i + 1) % n][i] += 1;
    }
    // lower-triangular multipliers of the LDL^T elimination
    std::vector<std::vector<Rat>> l(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        l[i][i] = 1;

    for (int k = 0; k < n; ++k) {
        if (a[k][k] >= 0) {
            // solve L^T x = e_k, then x^T M x equals the offending pivot
            std::vector<Rat> x(n, Rat(0));
            x[k] = 1;
            for (int i = k - 1; i >= 0; --i)
                for (int j = i + 1; j <= k; ++j)
                    x[i] -= l[j][i] * x[j];
            Int denom = 1;
            for (int i = 0; i <= k; ++i)
                denom = boost::multiprecision::lcm(denom, x[i].denominator());
            DefiniteCheck res;
            for (int i = 0; i < n; ++i)
                res.witness.push_back(boost::rational_cast<Int>(x[i] * denom));
            return res;
        }
        for (int i = k + 1; i < n; ++i) {
            Rat m = a[i][k] / a[k][k];
            l[i][k] = m;
            for (int j = k; j < n; ++j)
                a[i][j] -= m * a[k][j];
        }
    }
    return {true, {}};
}

// Full-rank triangular basis {(p,0),(q,r)} of the lattice spanned by the
// generators, built by Euclidean steps on the y-coordinates. Empty when the
// span has rank < 2.
struct TriangularBasis {
    Int p = 0, q = 0, r = 0;
};

inline std::optional<TriangularBasis> triangular_basis(std::vector<LatticeVector> gens) {
    std::vector<LatticeVector> work;
    for (const LatticeVector& g : gens)
        if (!(g.x == 0 && g.y == 0))
            work.push_back(g);
    // eliminate y-coordinates against the smallest nonzero one
    for (;;) {
        int piv = -1;
        for (int i = 0; i < static_cast<int>(work.size()); ++i)
            if (work[i].y != 0 &&
                (piv < 0 || abs(work[i].y) < abs(work[piv].y)))
                piv = i;
        if (piv < 0)
            break;
        bool changed = false;
        for (int i = 0; i < static_cast<int>(work.size()); ++i) {
            if (i == piv || work[i].y == 0)
                continue;
            Int f = work[i].y / work[piv].y; // truncated, remainder shrinks
            work[i] = work[i] - f * work[piv];
            changed = changed || !(f == 0);
            if (work[i].y != 0)
                changed = true; // another pass will reduce further
        }
        if (!changed)
            break;
    }
    TriangularBasis b;
    for (const LatticeVector& g : work) {
        if (g.y != 0) {
            b.q = g.x;
            b.r = g.y;
        } else {
            b.p = boost::multiprecision::gcd(b.p, g.x);
        }
    }
    if (b.p == 0 || b.r == 0)
        return std::nullopt;
    if (b.p < 0)
        b.p = -b.p;
    return b;
}

inline bool in_lattice(const LatticeVector& v, const TriangularBasis& b) {
    if (v.y % b.r != 0)
        return false;
    Int t = v.y / b.r;
    return (v.x - t * b.q) % b.p == 0;
}

// Brute-force coset enumeration of Z^2 modulo the generator span: breadth
// first over unit steps, testing membership of differences against the
// triangular basis. Returns nullopt when the index exceeds the cap or the
// span has rank < 2.
inline std::optional<long long> coset_count(const std::vector<LatticeVector>& gens,
                                            long long cap = 200) {
    std::optional<TriangularBasis> basis = triangular_basis(gens);
    if (!basis)
        return std::nullopt;
    std::vector<LatticeVector> reps;
    std::deque<LatticeVector> frontier;
    reps.push_back({0, 0});
    frontier.push_back({0, 0});
    const LatticeVector steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (!frontier.empty()) {
        LatticeVector cur = frontier.front();
        frontier.pop_front();
        for (const LatticeVector& s : steps) {
            LatticeVector next = cur + s;
            bool known = false;
            for (const LatticeVector& r : reps)
                if (in_lattice(next - r, *basis)) {
                    known = true;
                    break;
                }
            if (known)
                continue;
            reps.push_back(next);
            if (static_cast<long long>(reps.size()) > cap)
                return std::nullopt;
            frontier.push_back(next);
        }
    }
    return static_cast<long long>(reps.size());
}

#ifdef ATK_CLI_PATH
struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the installed command line binary through the shell, capturing
// standard output; the ATK_CLI_PATH macro is provided by the build. The
// prefix goes in front of the binary, e.g. "VAR=1" for environment tests.
inline RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + (prefix.empty() ? "" : " ") + std::string(ATK_CLI_PATH) + " " +
                      args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}
#endif // ATK_CLI_PATH

} // namespace atk_test

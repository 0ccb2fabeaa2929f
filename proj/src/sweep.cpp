#include "atk/sweep.hpp"

namespace atk {

namespace {

constexpr int N = 9;
constexpr int G = 2 * N; // |D_9|
constexpr std::int64_t MOD = 1000000007;

// Element e < 9 is the rotation i -> i+e, element 9+k the reflection
// i -> k-i, matching the dihedral conventions used everywhere else.
struct DihedralTables {
    int perm[G][N];
    int comp[G][G]; // comp[a][b] = index of a after b
    int realized[6];

    DihedralTables() {
        for (int e = 0; e < G; ++e)
            for (int i = 0; i < N; ++i)
                perm[e][i] = e < N ? (e + i) % N : (e - N - i % N + 2 * N) % N;
        for (int a = 0; a < G; ++a)
            for (int b = 0; b < G; ++b) {
                int img[N];
                for (int i = 0; i < N; ++i)
                    img[i] = perm[a][perm[b][i]];
                int found = -1;
                for (int e = 0; e < G && found < 0; ++e) {
                    bool same = true;
                    for (int i = 0; i < N && same; ++i)
                        same = perm[e][i] == img[i];
                    if (same)
                        found = e;
                }
                comp[a][b] = found;
            }
        // rotations by 0,3,6 and reflections at 1,4,7
        int k = 0;
        for (int r : {0, 3, 6})
            realized[k++] = r;
        for (int r : {1, 4, 7})
            realized[k++] = N + r;
    }
};

const DihedralTables& tables() {
    static const DihedralTables t;
    return t;
}

bool negative_definite9(const int a[N]) {
    long long prev = 0, cur = 1;
    for (int k = 1; k < N; ++k) {
        long long next = -static_cast<long long>(a[k - 1]) * cur - prev;
        prev = cur;
        cur = next;
        if ((k % 2 == 0) ? cur <= 0 : cur >= 0)
            return false;
    }
    long long t = -static_cast<long long>(a[N - 1]) * cur - prev; // full path det
    prev = 0, cur = 1;
    for (int k = 1; k < N - 1; ++k) {
        long long next = -static_cast<long long>(a[k]) * cur - prev;
        prev = cur;
        cur = next;
    }
    long long full = t - cur + 2;
    return full < 0;
}

int orbits9(const int a[N]) {
    const DihedralTables& t = tables();
    int sym[G];
    int n_sym = 0;
    for (int e = 0; e < G; ++e) {
        bool fix = true;
        for (int i = 0; i < N && fix; ++i)
            fix = a[t.perm[e][i]] == a[i];
        if (fix)
            sym[n_sym++] = e;
    }
    bool seen[G] = {};
    int stack[G];
    int orbits = 0;
    for (int e = 0; e < G; ++e) {
        if (seen[e])
            continue;
        ++orbits;
        int top = 0;
        stack[top++] = e;
        seen[e] = true;
        while (top > 0) {
            int s0 = stack[--top];
            for (int si = 0; si < n_sym; ++si)
                for (int r : t.realized) {
                    int img = t.comp[sym[si]][t.comp[s0][r]];
                    if (!seen[img]) {
                        seen[img] = true;
                        stack[top++] = img;
                    }
                }
        }
    }
    return orbits;
}

} // namespace

int alignment_orbits_length9(const std::array<int, 9>& entries) {
    return orbits9(entries.data());
}

SweepResult sweep_length9(bool parallel) {
    tables(); // build outside the parallel region
    constexpr std::int64_t span = 1ll << (2 * N);
    std::int64_t definite = 0, u1 = 0, u2 = 0, u3 = 0, checksum = 0;
    int max_u = 0;

#ifdef ATK_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel) \
    reduction(+ : definite, u1, u2, u3, checksum) reduction(max : max_u)
#else
    (void)parallel;
#endif
    for (std::int64_t idx = 0; idx < span; ++idx) {
        int a[N];
        for (int i = 0; i < N; ++i)
            a[i] = 2 + static_cast<int>((idx >> (2 * (N - 1 - i))) & 3);
        if (!negative_definite9(a))
            continue;
        ++definite;
        int u = orbits9(a);
        if (u == 1)
            ++u1;
        else if (u == 2)
            ++u2;
        else
            ++u3;
        if (u > max_u)
            max_u = u;
        std::int64_t h = 0;
        for (int i = 0; i < N; ++i)
            h = (h * 131 + a[i]) % MOD;
        checksum += h * u % MOD;
    }

    SweepResult res;
    res.total = span;
    res.definite = definite;
    res.u_hist = {0, u1, u2, u3};
    res.max_u = max_u;
    res.checksum = checksum % MOD;
    return res;
}

} // namespace atk

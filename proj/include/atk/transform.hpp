#pragma once

#include <optional>
#include <vector>

#include "atk/marked_pair.hpp"

namespace atk {

// Elementary transformation: one interior blowup on component `up` composed
// with one blowdown onto the opposite component `down`. Indices 0-based.
struct Move {
    int up;
    int down;

    bool operator==(const Move&) const = default;
};

struct Path {
    Cycle start;
    std::vector<Move> moves;
    Cycle end;
};

// Entry at `up` increases by 1, entry at `down` decreases by 1. Requires the
// cycle to be toric-realizable with rays up/down opposite.
Cycle elem_transform(const Cycle& c, const Move& m);

// Same move tracked on a marked pair: consumes one mark on `up`, deposits one
// on `down`; the derived cycle a_i + m_i is unchanged at every component.
MarkedPair relative_elem_transform(const MarkedPair& p, const Move& m);

bool toric_realizable(const Cycle& c);

inline constexpr int default_max_moves = 8;
inline constexpr int default_entry_min = -2;

// Breadth-first search over toric-realizable cycles with entries >= entry_min.
// Success means the endpoint is dihedral-equivalent to the target; the result
// is a shortest path with deterministic lexicographic tie-breaking. Empty
// optional means not found within bounds (never a proof of nonexistence).
std::optional<Path> find_path(const Cycle& start, const Cycle& target,
                              int max_moves = default_max_moves,
                              const Int& entry_min = default_entry_min);

// Bounded BFS over marked pairs using relative moves; true iff some reachable
// state's base cycle is dihedral-equal to the target model's cycle.
bool relative_reachable(const MarkedPair& p, const StandardModel& target, int max_moves);

} // namespace atk

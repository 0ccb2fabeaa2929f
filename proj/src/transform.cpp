#include "atk/transform.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace atk {

namespace {

void check_move_indices(std::size_t n, const Move& m) {
    if (m.up < 0 || m.up >= static_cast<int>(n) || m.down < 0 || m.down >= static_cast<int>(n))
        fail(errc::length_out_of_range, "move component index out of range");
    if (m.up == m.down)
        fail(errc::not_opposite, "move needs two distinct components");
}

Cycle shifted(const Cycle& c, const Move& m) {
    Cycle out = c;
    out[m.up] += 1;
    out[m.down] -= 1;
    return out;
}

} // namespace

Cycle elem_transform(const Cycle& c, const Move& m) {
    validate_cycle(c);
    check_move_indices(c.size(), m);
    Fan f = fan_from_cycle(c); // NotToric if the cycle has no fan
    if (!are_opposite(f, m.up, m.down))
        fail(errc::not_opposite,
             "components " + std::to_string(m.up) + " and " + std::to_string(m.down) +
                 " do not span opposite rays");
    return shifted(c, m);
}

MarkedPair relative_elem_transform(const MarkedPair& p, const Move& m) {
    check_move_indices(p.marks.size(), m);
    if (!are_opposite(p.base, m.up, m.down))
        fail(errc::not_opposite,
             "components " + std::to_string(m.up) + " and " + std::to_string(m.down) +
                 " do not span opposite rays");
    if (p.marks[m.up] < 1)
        fail(errc::no_mark_available,
             "component " + std::to_string(m.up) + " carries no mark to move");
    Cycle next = shifted(cycle_from_fan(p.base), m);
    MarkedPair out{fan_from_cycle(next), p.marks};
    out.marks[m.up] -= 1;
    out.marks[m.down] += 1;
    return out;
}

bool toric_realizable(const Cycle& c) {
    try {
        fan_from_cycle(c);
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

std::optional<Path> find_path(const Cycle& start, const Cycle& target,
                              int max_moves, const Int& entry_min) {
    validate_cycle(start);
    validate_cycle(target);
    if (start.size() != target.size())
        fail(errc::length_mismatch, "start and target have different lengths");
    const int n = static_cast<int>(start.size());

    if (dihedral_equal(start, target))
        return Path{start, {}, start};
    if (!toric_realizable(start))
        return std::nullopt;

    // Parent links for path reconstruction; cycles are explored in move order
    // (up, down) ascending, so the first hit is a lexicographically least
    // shortest path.
    std::map<Cycle, std::pair<Cycle, Move>> parent;
    std::set<Cycle> visited{start};
    std::deque<std::pair<Cycle, int>> queue{{start, 0}};

    auto reconstruct = [&](Cycle last) {
        Path p;
        p.end = last;
        while (!(last == start)) {
            auto& [prev, mv] = parent.at(last);
            p.moves.push_back(mv);
            last = prev;
        }
        p.start = start;
        std::reverse(p.moves.begin(), p.moves.end());
        return p;
    };

    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (depth >= max_moves)
            continue;
        Fan f = fan_from_cycle(cur);
        for (int b = 0; b < n; ++b) {
            for (int d = 0; d < n; ++d) {
                if (b == d || !are_opposite(f, b, d))
                    continue;
                Cycle next = shifted(cur, {b, d});
                if (next[d] < entry_min)
                    continue;
                if (visited.count(next))
                    continue;
                visited.insert(next);
                parent.emplace(next, std::make_pair(cur, Move{b, d}));
                if (dihedral_equal(next, target))
                    return reconstruct(next);
                queue.emplace_back(std::move(next), depth + 1);
            }
        }
    }
    return std::nullopt;
}

namespace {

std::vector<Int> pair_key(const MarkedPair& p) {
    std::vector<Int> key;
    for (const LatticeVector& v : p.base.rays()) {
        key.push_back(v.x);
        key.push_back(v.y);
    }
    for (const Int& m : p.marks)
        key.push_back(m);
    return key;
}

} // namespace

bool relative_reachable(const MarkedPair& p, const StandardModel& target, int max_moves) {
    if (p.marks.size() != target.cycle.size())
        return false; // moves never change the length
    const int n = static_cast<int>(p.marks.size());

    std::set<std::vector<Int>> visited{pair_key(p)};
    std::deque<std::pair<MarkedPair, int>> queue{{p, 0}};
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        if (dihedral_equal(cycle_from_fan(cur.base), target.cycle))
            return true;
        if (depth >= max_moves)
            continue;
        for (int b = 0; b < n; ++b) {
            if (cur.marks[b] < 1)
                continue;
            for (int d = 0; d < n; ++d) {
                if (b == d || !are_opposite(cur.base, b, d))
                    continue;
                MarkedPair next = relative_elem_transform(cur, {b, d});
                std::vector<Int> key = pair_key(next);
                if (visited.count(key))
                    continue;
                visited.insert(std::move(key));
                queue.emplace_back(std::move(next), depth + 1);
            }
        }
    }
    return false;
}

} // namespace atk

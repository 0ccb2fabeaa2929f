#include "atk/tables.hpp"

#include <cstddef>
#include <string>

#ifdef ATK_HAVE_OPENMP
#include <omp.h>
#endif

namespace atk {

const char* to_string(ReplayStatus s) {
    switch (s) {
    case ReplayStatus::literal_pass: return "literal_pass";
    case ReplayStatus::pass_with_swapped_orientation: return "pass_with_swapped_orientation";
    case ReplayStatus::pass_with_per_move_flips: return "pass_with_per_move_flips";
    case ReplayStatus::resolved_by_search: return "resolved_by_search";
    case ReplayStatus::fail: return "fail";
    }
    return "?";
}

const char* to_string(ReplayMode m) {
    switch (m) {
    case ReplayMode::literal: return "literal";
    case ReplayMode::swapped: return "swapped";
    case ReplayMode::auto_detect: return "auto";
    }
    return "?";
}

std::optional<ReplayMode> parse_replay_mode(std::string_view s) {
    if (s == "literal") return ReplayMode::literal;
    if (s == "swapped") return ReplayMode::swapped;
    if (s == "auto") return ReplayMode::auto_detect;
    return std::nullopt;
}

namespace {

const TableRow* find_row(int table_id, const std::string& label) {
    for (const TableRow& r : embedded_rows())
        if (r.table_id == table_id && !r.label.empty() && r.label == label)
            return &r;
    return nullptr;
}

// A row plus its continuation chain, e.g. "(v)" -> "(i)".
std::vector<const TableRow*> row_chain(const TableRow& row) {
    std::vector<const TableRow*> chain{&row};
    const TableRow* cur = &row;
    while (!cur->continuation.empty()) {
        const TableRow* next = find_row(cur->table_id, cur->continuation);
        if (next == nullptr)
            fail(errc::unknown_continuation,
                 "row continues at '" + cur->continuation + "' but no such labeled row exists");
        if (chain.size() > 8)
            fail(errc::unknown_continuation, "continuation chain does not terminate");
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

// Apply the chain under one orientation assignment (bit i set = composite
// move i flipped). Returns the final cycle, or nothing if a move is invalid
// or a continuation junction fails to match.
std::optional<Cycle> simulate(const std::vector<const TableRow*>& chain, unsigned bits) {
    Cycle cur = chain[0]->start;
    const int n = static_cast<int>(cur.size());
    std::size_t idx = 0;
    for (std::size_t s = 0; s < chain.size(); ++s) {
        const TableRow* seg = chain[s];
        if (s > 0) {
            // Junction: the intermediate must be a relabeling of the
            // continuation row's start; adopt that labeling and go on.
            bool matched = false;
            for (const DihedralElement& g : dihedral_elements(n)) {
                if (atk::apply(g, cur) == seg->start) {
                    matched = true;
                    break;
                }
            }
            if (!matched)
                return std::nullopt;
            cur = seg->start;
        }
        for (const auto& [i, j] : seg->listed_moves) {
            bool flip = (bits >> idx) & 1u;
            ++idx;
            Move m{(flip ? j : i) - 1, (flip ? i : j) - 1};
            try {
                cur = elem_transform(cur, m);
            } catch (const domain_error&) {
                return std::nullopt;
            }
        }
    }
    return cur;
}

std::string integrity_note(const TableRow& row) {
    Int sum = 0;
    for (const Int& a : row.start)
        sum += a;
    Int expected = 3 * static_cast<long>(row.start.size()) - 12;
    if (sum != expected)
        return "start entry sum " + sum.str() + " != " + expected.str() + "; ";
    if (!toric_realizable(row.start))
        return "start cycle is not toric-realizable; ";
    return "";
}

} // namespace

ReplayReport replay(const TableRow& row, ReplayMode mode) {
    ReplayReport rep;
    rep.table_id = row.table_id;
    rep.label = row.label;
    rep.start = row.start;
    rep.declared_target = row.declared_target;
    rep.notes = integrity_note(row);

    const std::vector<const TableRow*> chain = row_chain(row);
    std::size_t k = 0;
    for (const TableRow* seg : chain)
        k += seg->listed_moves.size();
    if (chain.size() > 1)
        rep.notes += "continues at " + row.continuation + " (" + std::to_string(k) +
                     " composite moves); ";

    const Cycle& target = standard_model(row.declared_target).cycle;
    const unsigned full = k == 0 ? 0u : (1u << k) - 1u;

    // Assignment order: printed, fully flipped, then the rest ascending.
    std::vector<unsigned> order{0u};
    if (full != 0u)
        order.push_back(full);
    if (mode == ReplayMode::auto_detect)
        for (unsigned b = 1; b < full; ++b)
            order.push_back(b);
    else if (mode == ReplayMode::literal)
        order = {0u};
    else
        order = {full};

    for (unsigned bits : order) {
        std::optional<Cycle> end = simulate(chain, bits);
        if (!end || !dihedral_equal(*end, target))
            continue;
        if (bits == 0u)
            rep.status = ReplayStatus::literal_pass;
        else if (bits == full)
            rep.status = ReplayStatus::pass_with_swapped_orientation;
        else
            rep.status = ReplayStatus::pass_with_per_move_flips;
        rep.orientation_choices.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            rep.orientation_choices[i] = (bits >> i) & 1u;
        rep.final_cycle = *end;
        return rep;
    }

    if (mode == ReplayMode::auto_detect) {
        // Bounded search fallback: printed move count plus slack of 2.
        std::optional<Path> p = find_path(row.start, target, static_cast<int>(k) + 2);
        if (p) {
            rep.status = ReplayStatus::resolved_by_search;
            rep.final_cycle = p->end;
            rep.search_path = std::move(p);
            rep.notes += "reached by search in " +
                         std::to_string(rep.search_path->moves.size()) + " moves; ";
            return rep;
        }
        rep.notes += "no orientation assignment works and search within " +
                     std::to_string(k + 2) + " moves found no path; ";
    } else {
        rep.notes += std::string("replay failed under ") + to_string(mode) + " orientation; ";
    }
    rep.status = ReplayStatus::fail;
    return rep;
}

VerifySummary verify_all(ReplayMode mode, int table_filter, bool parallel) {
    std::vector<TableRow> rows;
    if (table_filter == 0)
        for (const TableRow& r : figure_rows())
            rows.push_back(r);
    for (const TableRow& r : embedded_rows())
        if (table_filter == 0 || r.table_id == table_filter)
            rows.push_back(r);

    VerifySummary sum;
    sum.reports.resize(rows.size());

#ifdef ATK_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < rows.size(); ++i)
            sum.reports[i] = replay(rows[i], mode);
    } else
#else
    (void)parallel;
#endif
    {
        for (std::size_t i = 0; i < rows.size(); ++i)
            sum.reports[i] = replay(rows[i], mode);
    }

    int index_in_table = 0;
    int last_table = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].table_id != last_table) {
            last_table = rows[i].table_id;
            index_in_table = 0;
        }
        sum.reports[i].row_index = index_in_table++;
        switch (sum.reports[i].status) {
        case ReplayStatus::literal_pass: ++sum.n_literal; break;
        case ReplayStatus::pass_with_swapped_orientation: ++sum.n_swapped; break;
        case ReplayStatus::pass_with_per_move_flips: ++sum.n_per_move; break;
        case ReplayStatus::resolved_by_search: ++sum.n_search; break;
        case ReplayStatus::fail: ++sum.n_fail; break;
        }
    }
    sum.all_ok = sum.n_fail == 0;
    return sum;
}

} // namespace atk

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atk/transform.hpp"

namespace atk {

// One row of the bundled contraction tables (lengths 7, 8, 9) or of the two
// worked figure sequences (length 6). Moves are stored exactly as printed,
// as 1-based index pairs; `continuation` names another labeled row whose
// sequence the row joins ("(i)" style tags).
struct TableRow {
    int table_id = 0; // boundary length: 6 (figures), 7, 8 or 9
    std::string label;
    Cycle start;
    std::vector<std::pair<int, int>> listed_moves;
    std::string continuation;
    ModelName declared_target = ModelName::T6;
};

// The 4 + 15 + 35 table rows, in table order.
const std::vector<TableRow>& embedded_rows();
std::vector<TableRow> embedded_rows(int table_id);

// The two worked sequences ending at the hexagon, as length-6 rows.
const std::vector<TableRow>& figure_rows();

enum class ReplayMode { literal, swapped, auto_detect };

enum class ReplayStatus {
    literal_pass,
    pass_with_swapped_orientation,
    pass_with_per_move_flips,
    resolved_by_search,
    fail,
};

const char* to_string(ReplayStatus s);
const char* to_string(ReplayMode m);
std::optional<ReplayMode> parse_replay_mode(std::string_view s);

struct ReplayReport {
    int table_id = 0;
    int row_index = 0; // position within the row's table
    std::string label;
    Cycle start;
    ModelName declared_target = ModelName::T6;
    ReplayStatus status = ReplayStatus::fail;
    // One flag per composite move (own moves plus continuation chain):
    // 0 = printed orientation, 1 = flipped. Empty for search results.
    std::vector<int> orientation_choices;
    std::optional<Cycle> final_cycle;
    std::optional<Path> search_path;
    std::string notes;
};

// Literal mode applies every printed (i, j) as up=i, down=j; swapped mode
// flips every move; auto tries the printed assignment, then the fully
// flipped one, then all remaining per-move assignments in ascending bitmask
// order, and finally falls back to a bounded path search.
ReplayReport replay(const TableRow& row, ReplayMode mode);

struct VerifySummary {
    std::vector<ReplayReport> reports;
    int n_literal = 0;
    int n_swapped = 0;
    int n_per_move = 0;
    int n_search = 0;
    int n_fail = 0;
    bool all_ok = false; // every row at least resolved_by_search
};

// Replays the figure sequences (when table_filter is 0) and every table row.
// Rows are independent; with `parallel` they are processed concurrently and
// merged back in table order.
VerifySummary verify_all(ReplayMode mode, int table_filter = 0, bool parallel = false);

} // namespace atk

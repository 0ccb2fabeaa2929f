#include "atk/tables.hpp"

namespace atk {

// Contraction-sequence rows, embedded exactly as printed in the source
// tables (1-based move indices, original row order and tags). Two of the
// length-9 rows are known to be internally inconsistent; they are kept
// verbatim so the verifier can report them.
const std::vector<TableRow>& embedded_rows() {
    static const std::vector<TableRow> rows = {
    {7, "", {1, 1, 1, 1, 2, 1, 2}, {}, "", ModelName::T7},
    {7, "", {0, 1, 1, 2, 2, 1, 2}, {{4, 1}}, "", ModelName::T7},
    {7, "", {0, 1, 1, 3, 1, 2, 1}, {{4, 1}}, "", ModelName::T7},
    {7, "", {0, 0, 2, 2, 1, 3, 1}, {{3, 1}, {6, 2}}, "", ModelName::T7},
    {8, "a", {1, 2, 1, 2, 1, 2, 1, 2}, {}, "", ModelName::Ti},
    {8, "b", {1, 2, 1, 1, 1, 2, 1, 3}, {{6, 3}, {8, 5}}, "", ModelName::Tii},
    {8, "", {2, 1, 2, 1, 1, 2, 1, 2}, {}, "", ModelName::Tii},
    {8, "", {1, 1, 2, 1, 2, 2, 1, 2}, {}, "", ModelName::Tii},
    {8, "", {1, 1, 1, 1, 2, 2, 1, 3}, {{8, 3}}, "", ModelName::Tii},
    {8, "c", {0, 1, 1, 2, 2, 2, 1, 3}, {{4, 1}, {8, 3}}, "", ModelName::Tii},
    {8, "d", {0, 2, 1, 2, 2, 2, 1, 2}, {{5, 1}}, "", ModelName::Ti},
    {8, "", {0, 1, 1, 2, 3, 1, 2, 2}, {{8, 2}, {5, 1}}, "", ModelName::Tii},
    {8, "", {0, 1, 1, 3, 1, 3, 1, 2}, {{4, 1}, {4, 1}, {6, 3}}, "", ModelName::Tii},
    {8, "", {0, 1, 1, 3, 2, 1, 3, 1}, {{4, 1}, {7, 2}}, "", ModelName::Tii},
    {8, "", {0, 1, 1, 4, 1, 2, 2, 1}, {{4, 1}, {4, 1}}, "", ModelName::Tii},
    {8, "", {0, 1, 2, 1, 4, 1, 2, 1}, {{5, 1}, {3, 8}, {5, 2}}, "", ModelName::Tii},
    {8, "", {0, 1, 2, 2, 2, 1, 4, 0}, {{7, 1}, {3, 8}, {7, 2}}, "", ModelName::Tii},
    {8, "", {0, 1, 2, 3, 1, 2, 3, 0}, {{7, 1}, {4, 1}}, "", ModelName::Tii},
    {8, "", {0, 1, 3, 1, 3, 1, 3, 0}, {{7, 1}, {7, 1}, {4, 8}}, "", ModelName::Tii},
    {9, "(i)", {2, 1, 2, 1, 3, 1, 2, 2, 1}, {{7, 2}, {1, 6}, {9, 5}}, "", ModelName::T9},
    {9, "", {3, 1, 2, 1, 2, 1, 2, 2, 1}, {{8, 4}}, "(i)", ModelName::T9},
    {9, "", {2, 1, 2, 1, 2, 1, 3, 1, 2}, {{9, 4}}, "(i)", ModelName::T9},
    {9, "(ii)", {1, 1, 2, 1, 2, 2, 2, 1, 3}, {{1, 6}, {9, 5}}, "", ModelName::T9},
    {9, "", {2, 1, 2, 1, 1, 2, 2, 1, 3}, {{1, 5}}, "(ii)", ModelName::T9},
    {9, "", {2, 2, 1, 2, 2, 1, 2, 2, 1}, {}, "", ModelName::T9},
    {9, "", {2, 1, 1, 2, 1, 2, 3, 1, 2}, {{6, 2}}, "(ii)", ModelName::T9},
    {9, "", {2, 1, 1, 2, 1, 3, 1, 3, 1}, {{8, 3}}, "(i)", ModelName::T9},
    {9, "", {2, 1, 1, 1, 1, 3, 2, 1, 3}, {{6, 3}, {9, 4}}, "", ModelName::T9},
    {9, "(iii)", {1, 1, 1, 2, 1, 3, 2, 1, 3}, {{9, 3}, {6, 1}}, "", ModelName::T9},
    {9, "(iv)", {2, 1, 1, 1, 1, 4, 1, 2, 2}, {{6, 3}, {1, 5}, {6, 2}}, "", ModelName::T9},
    {9, "(v)", {1, 1, 1, 2, 1, 4, 1, 2, 2}, {{6, 2}}, "(i)", ModelName::T9},
    {9, "(vi)", {1, 1, 1, 1, 3, 1, 3, 1, 3}, {{9, 3}, {5, 1}}, "(i)", ModelName::T9},
    {9, "", {2, 0, 3, 1, 2, 2, 2, 2, 1}, {{5, 9}, {8, 4}, {3, 7}}, "", ModelName::T9},
    {9, "", {0, 0, 1, 2, 2, 2, 2, 1, 5}, {{9, 2}, {4, 1}, {9, 3}, {5, 1}, {9, 4}}, "", ModelName::T9},
    {9, "", {1, 0, 1, 1, 3, 2, 2, 1, 4}, {{5, 2}}, "(iv)", ModelName::T9},
    {9, "", {0, 0, 1, 3, 1, 3, 2, 1, 4}, {{9, 2}, {4, 1}}, "(iii)", ModelName::T9},
    {9, "", {1, 0, 1, 2, 1, 4, 2, 1, 3}, {{6, 2}, {6, 2}}, "(i)", ModelName::T9},
    {9, "", {2, 0, 1, 1, 2, 3, 2, 1, 3}, {{5, 2}, {6, 3}, {9, 4}}, "", ModelName::T9},
    {9, "", {0, 0, 1, 2, 3, 1, 3, 1, 4}, {{9, 2}, {4, 1}}, "(vi)", ModelName::T9},
    {9, "", {1, 0, 1, 1, 4, 1, 3, 1, 3}, {{5, 2}}, "(vi)", ModelName::T9},
    {9, "", {1, 0, 0, 3, 2, 1, 4, 1, 3}, {{4, 2}, {9, 3}}, "(v)", ModelName::T9},
    {9, "", {1, 0, 1, 2, 2, 1, 5, 1, 2}, {{7, 2}}, "(v)", ModelName::T9},
    {9, "", {1, 0, 2, 1, 3, 1, 4, 1, 2}, {{7, 2}, {7, 2}}, "(i)", ModelName::T9},
    {9, "", {1, 0, 2, 2, 1, 3, 3, 1, 2}, {{7, 2}, {5, 2}}, "", ModelName::T9},
    {9, "", {2, 0, 2, 1, 2, 2, 3, 1, 2}, {{6, 2}}, "(i)", ModelName::T9},
    {9, "", {1, 0, 0, 2, 2, 3, 1, 2, 4}, {{4, 2}, {9, 3}, {6, 2}}, "", ModelName::T9},
    {9, "", {1, 0, 1, 1, 3, 3, 3, 2, 3}, {{5, 2}, {9, 3}, {5, 2}}, "", ModelName::T9},
    {9, "", {1, 0, 2, 1, 2, 4, 1, 2, 2}, {{6, 2}, {6, 2}}, "", ModelName::T9},
    {9, "", {1, 0, 0, 2, 3, 2, 1, 3, 3}, {{4, 2}, {9, 3}, {5, 2}, {8, 3}}, "", ModelName::T9},
    {9, "", {1, 0, 1, 1, 4, 2, 1, 3, 2}, {{5, 2}, {8, 3}}, "", ModelName::T9},
    {9, "", {1, 0, 0, 3, 2, 2, 1, 2, 4}, {{4, 2}, {9, 3}, {8, 2}, {4, 9}, {8, 3}}, "", ModelName::T9},
    {9, "", {1, 0, 1, 2, 2, 2, 1, 5, 1}, {{8, 2}, {4, 9}, {8, 3}}, "", ModelName::T9},
    {9, "", {1, 0, 2, 1, 3, 2, 1, 4, 1}, {{8, 2}, {5, 9}}, "", ModelName::T9},
    {9, "", {2, 0, 2, 1, 2, 3, 1, 3, 1}, {{6, 2}, {9, 3}}, "(i)", ModelName::T9},
    };
    return rows;
}

std::vector<TableRow> embedded_rows(int table_id) {
    std::vector<TableRow> out;
    for (const TableRow& r : embedded_rows())
        if (r.table_id == table_id)
            out.push_back(r);
    return out;
}

const std::vector<TableRow>& figure_rows() {
    static const std::vector<TableRow> rows = {
    {6, "case-b-i", {0, 1, 1, 2, 1, 1}, {{1, 4}}, "", ModelName::T6},
    {6, "case-b-ii", {0, 0, 2, 1, 2, 1}, {{1, 3}, {2, 5}}, "", ModelName::T6},
    };
    return rows;
}

} // namespace atk

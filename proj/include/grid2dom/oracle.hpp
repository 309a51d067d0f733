#pragma once

#include "grid2dom/config.hpp"
#include "grid2dom/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grid2dom {

// Independent cross-checks for the column-DP solver. Deliberately share
// nothing with the label/transfer machinery beyond the grid model itself.

// Exhaustive minimum over all 3^(rows*cols) assignments. Throws
// ResourceLimitError when rows*cols exceeds config.brute_force_cell_cap.
std::int64_t brute_force(int rows, int cols, const RunConfig& config = {});

// Second-opinion DP over raw stone columns (base-3 codes, no labels): a
// sliding window of two columns, checking the middle column's domination at
// each extension and the last column's at the end. Guards its own cost:
// cols == 1 accepts rows <= 14, otherwise rows <= 6.
std::int64_t raw_column_dp(int rows, int cols);

// Same DP, reporting the minimum for every column count 1..cols_max from a
// single forward sweep.
std::vector<std::int64_t> raw_column_dp_table(int rows, int cols_max);

// The published minimum-weight constructions for 1, 2 and 3 rows (any
// cols >= 1). The result is a valid witness whose weight matches the
// closed form. Throws std::invalid_argument for other row counts.
StoneGrid pattern_witness(int rows, int cols);

enum class FormKind {
    exact,       // proven equality
    upper_bound, // proven upper bound (equality observed but not proven)
    table,       // published exact-value table
    conjectured, // published conjecture
};

struct ClosedFormValue {
    std::int64_t value = 0;
    FormKind kind = FormKind::exact;
    std::string branch; // which formula / table row produced the value
};

const char* form_kind_name(FormKind kind);

// gamma(rows, cols) by published formula:
//   rows 1: 2*ceil(cols/3)            (exact)
//   rows 2: cols + 1                  (exact)
//   rows 3: floor(3*cols/2) + 1       (proven upper bound)
//   rows 4: value table for cols <= 100; conjectured formula beyond.
// Throws std::invalid_argument for rows >= 5 (use has_closed_form to probe).
ClosedFormValue closed_form(int rows, std::int64_t cols);
bool has_closed_form(int rows, std::int64_t cols);

// The 4-row pieces individually, for tests that compare branch by branch.
ClosedFormValue gamma4_table_value(std::int64_t cols);     // 1 <= cols <= 100
std::int64_t gamma4_conjecture_value(std::int64_t cols);   // cols >= 49

} // namespace grid2dom

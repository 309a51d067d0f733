#pragma once

#include "grid2dom/config.hpp"
#include "grid2dom/grid.hpp"
#include "grid2dom/labels.hpp"
#include "grid2dom/transfer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace grid2dom {

// a + b with kInfiniteWeight absorbing and overflow clamping to it.
std::int64_t saturating_add(std::int64_t a, std::int64_t b);

// One column of the DP: out[j] = min over allowed predecessors i of in[i],
// plus the stone weight of state j. Unreachable states stay infinite.
// in and out must both have space.size() entries (and be distinct).
void dp_step(const StateSpace& space, const TransferTable& table,
             std::span<const std::int64_t> in, std::span<std::int64_t> out);

// Same, and records for each target the smallest predecessor index achieving
// the minimum (UINT32_MAX when unreachable) for witness backtracking.
void dp_step_recording(const StateSpace& space, const TransferTable& table,
                       std::span<const std::int64_t> in, std::span<std::int64_t> out,
                       std::span<std::uint32_t> pred_out);

struct SolveResult {
    std::int64_t gamma = 0;
    std::optional<StoneGrid> witness;
};

// The gamma(m, n) sequence grows linearly from some point on: increments of
// consecutive values repeat with this period from start_n to the scan
// horizon (at least three full periods observed).
struct LinearTail {
    int start_n = 0;
    int period = 0;
    std::vector<std::int64_t> increments; // gamma(start_n + k + 1) - gamma(start_n + k)
};

// Column-DP solver for gamma(rows, n), any n >= 1, over a fixed row count.
// Building one of these enumerates T(rows) and evaluates the full transfer
// relation (optionally through the on-disk cache), so reuse it across n.
class Solver {
public:
    explicit Solver(int rows, RunConfig config = {});

    const StateSpace& space() const { return space_; }
    const TransferTable& table() const { return table_; }

    // gamma(rows, cols) by iterating cols DP steps. O(|T|^2/64) per column.
    std::int64_t solve(int cols) const;

    // Also reconstructs a minimum-weight {2}-dominating assignment by
    // backtracking smallest-index predecessors; the witness is re-verified
    // against the grid model before being returned.
    SolveResult solve_with_witness(int cols) const;

    // gamma(rows, 1..cols_max) from a single forward sweep.
    std::vector<std::int64_t> gamma_table(int cols_max) const;

    // gamma(rows, cols) via min-plus matrix powering, O(|T|^3 log cols):
    // the column count can be astronomically large.
    std::int64_t solve_minplus_power(std::int64_t cols) const;

    // Scans gamma(rows, 1..cols_max) for the eventual linear/periodic tail:
    // smallest start_n, then smallest period p <= cols_max/4, such that the
    // increment sequence is p-periodic from start_n through cols_max with at
    // least three full periods in view. nullopt when no tail qualifies.
    std::optional<LinearTail> detect_linear_tail(int cols_max) const;

private:
    std::vector<std::int64_t> seed() const;
    std::int64_t best_dominated(std::span<const std::int64_t> weights) const;

    RunConfig config_;
    StateSpace space_;
    TransferTable table_;
    std::vector<std::uint32_t> dominated_;
};

// One-shot conveniences (enumerate + build + solve).
std::int64_t solve(int rows, int cols, const RunConfig& config = {});
SolveResult solve_with_witness(int rows, int cols, const RunConfig& config = {});
std::optional<LinearTail> detect_linear_tail(int rows, int cols_max,
                                             const RunConfig& config = {});

} // namespace grid2dom

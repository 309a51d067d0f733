#pragma once

#include "grid2dom/config.hpp"
#include "grid2dom/labels.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace grid2dom {

// Column-to-column transfer predicate: can a column labeled `next` be placed
// immediately to the right of a column labeled `prev`? Two local conditions,
// checked row by row:
//   (a) top-up: a prev-column vertex still owing stones must receive them
//       from its right neighbor (A10/A01 owe 1, A00 owes 2);
//   (b) consistency: each next-column label must be exactly the label its
//       own stones and now-visible open neighborhood (left vertex plus
//       in-column neighbors) dictate.
// Throws std::invalid_argument when the spans are empty or differ in length.
bool compatible(std::span<const Label> prev, std::span<const Label> next);

// The all-A02 column: what "no column yet" looks like to the predicate.
// Placing the first real column to the right of it imposes exactly the
// first-column consistency rules, so it seeds the DP with weight 0.
ColumnState virtual_start_column(int rows);

// Dense predecessor bitsets over T(rows): bit i of row j says states[i] may
// stand immediately left of states[j]. Rows are packed 64 bits per word.
class TransferTable {
public:
    // Evaluates the predicate on all |T|^2 ordered pairs. Throws
    // ResourceLimitError if the bitsets would exceed memory_cap_bytes.
    static TransferTable build(const StateSpace& space,
                               std::uint64_t memory_cap_bytes = RunConfig{}.memory_cap_bytes);

    std::size_t order() const { return order_; }
    int rows() const { return rows_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool allowed(std::size_t pred, std::size_t target) const;
    std::span<const std::uint64_t> pred_bits(std::size_t target) const;

    // Index of the all-A02 state inside the space this table was built from.
    std::size_t virtual_start() const { return virtual_start_; }

    // Binary cache. Layout (all little-endian): "G2DM" magic, u32 format
    // version, u32 rows, u64 order, u64 words-per-row, then order*words
    // u64 bitset words. load() returns nullopt when the file is missing,
    // truncated, corrupt, or describes a different state space; callers
    // rebuild in that case.
    void save(const std::filesystem::path& file) const;
    static std::optional<TransferTable> load(const std::filesystem::path& file,
                                             const StateSpace& space);

private:
    TransferTable() = default;

    std::size_t order_ = 0;
    int rows_ = 0;
    std::size_t words_per_row_ = 0;
    std::size_t virtual_start_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Square min-plus matrix over state indices: cost[i*order+j] is the weight of
// appending column j after column i (so every finite entry of column j equals
// that state's stone count), or kInfiniteWeight when the move is not allowed.
struct MinPlusMatrix {
    std::size_t order = 0;
    std::vector<std::int64_t> cost;

    std::int64_t at(std::size_t i, std::size_t j) const { return cost[i * order + j]; }
};

MinPlusMatrix as_minplus_matrix(const TransferTable& table, const StateSpace& space,
                                std::uint64_t memory_cap_bytes = RunConfig{}.memory_cap_bytes);

} // namespace grid2dom

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grid2dom {

// Role a vertex plays inside its column once everything to its LEFT is fixed:
// the digit after 'A' is the vertex's own stone count, the second digit (when
// present) classifies the stones already visible in its open neighborhood.
//
//   A2  - carries 2 stones; its own demand is met outright
//   A11 - carries 1 stone, open neighborhood already has >= 1
//   A10 - carries 1 stone, open neighborhood has exactly 0 (owes 1)
//   A02 - carries 0 stones, open neighborhood already has >= 2
//   A01 - carries 0 stones, open neighborhood has exactly 1 (owes 1)
//   A00 - carries 0 stones, open neighborhood has exactly 0 (owes 2)
//
// The enum order is the canonical order used everywhere (state enumeration,
// tie-breaking, fixtures).
enum class Label : std::uint8_t { A2 = 0, A11, A10, A02, A01, A00 };

inline constexpr int kLabelCount = 6;
inline constexpr std::array<Label, kLabelCount> kAllLabels = {
    Label::A2, Label::A11, Label::A10, Label::A02, Label::A01, Label::A00};

// Stones the label's vertex carries itself.
int stones_on(Label lab);

// What the label asserts about the vertex's open-neighborhood stone total:
// exact == true pins it to `bound`; exact == false means ">= bound".
struct NeighborRule {
    bool exact;
    int bound;
};
NeighborRule neighbor_rule(Label lab);

// The unique label for a vertex carrying `stones` whose currently visible
// open-neighborhood total is `open_sum`. Throws std::invalid_argument.
Label label_of(int stones, int open_sum);

const char* label_name(Label lab);
std::optional<Label> parse_label(std::string_view name);

// A column labeling, top row first.
using ColumnState = std::vector<Label>;

// Stone total of a column.
int column_weight(std::span<const Label> column);

// Vertically adjacent label pairs / consecutive triples that cannot occur in
// any consistent column labeling. Pairs clash when one side pins its
// neighborhood total to a value the other side's stones already exceed;
// triples survive both pairwise checks but the middle label's pinned total is
// exceeded by its two column neighbors combined.
struct ProhibitedPatterns {
    std::vector<std::array<Label, 2>> pairs;   // 13 of them
    std::vector<std::array<Label, 3>> triples; // 4 of them
};

// Recomputed from the label semantics above (the slow, first-principles way).
ProhibitedPatterns derive_prohibited_patterns();

// The cached pattern tables everything else uses. First call cross-checks the
// derivation against a hard-coded reference list and throws std::logic_error
// if they ever disagree.
const ProhibitedPatterns& prohibited_patterns();

// True iff no prohibited pair or triple occurs among vertically consecutive
// entries. A 1-row column is always feasible. Throws on an empty column.
bool is_feasible_column(std::span<const Label> column);

// T(m): every feasible column labeling for an m-row grid, in canonical
// (lexicographic by Label order, top row most significant) order.
class StateSpace {
public:
    static constexpr int kDefaultMaxRows = 8;

    // Enumerates T(rows). Throws ResourceLimitError when rows > max_rows and
    // std::invalid_argument when rows < 1.
    static StateSpace enumerate(int rows, int max_rows = kDefaultMaxRows);

    int rows() const { return rows_; }
    std::size_t size() const { return count_; }

    std::span<const Label> state(std::size_t idx) const;        // canonical order
    std::span<const std::uint8_t> stones_of(std::size_t idx) const;
    int column_weight(std::size_t idx) const;
    std::optional<std::size_t> index_of(std::span<const Label> column) const;

    // Indices of T^D(rows): states whose labels all lie in {A2, A11, A02},
    // i.e. columns already fully dominated with no help from the right.
    std::vector<std::uint32_t> dominated_states() const;

    // "A11,A02,A01" style rendering, top row first.
    std::string state_name(std::size_t idx) const;

private:
    StateSpace() = default;

    int rows_ = 0;
    std::size_t count_ = 0;
    std::vector<Label> labels_;        // count_ * rows_, row-major
    std::vector<std::uint8_t> stones_; // count_ * rows_, stones per vertex
    std::vector<std::int32_t> weights_;
    std::vector<std::uint64_t> keys_;  // base-6 packing, ascending
};

} // namespace grid2dom

#include "grid2dom/labels.hpp"

#include "grid2dom/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace grid2dom {

int stones_on(Label lab) {
    switch (lab) {
    case Label::A2: return 2;
    case Label::A11:
    case Label::A10: return 1;
    case Label::A02:
    case Label::A01:
    case Label::A00: return 0;
    }
    throw std::logic_error("stones_on: bad label");
}

NeighborRule neighbor_rule(Label lab) {
    switch (lab) {
    case Label::A2: return {false, 0};  // already holds 2 stones, no demand
    case Label::A11: return {false, 1};
    case Label::A10: return {true, 0};
    case Label::A02: return {false, 2};
    case Label::A01: return {true, 1};
    case Label::A00: return {true, 0};
    }
    throw std::logic_error("neighbor_rule: bad label");
}

Label label_of(int stones, int open_sum) {
    if (stones < 0 || stones > 2)
        throw std::invalid_argument("label_of: stones must be 0, 1 or 2");
    if (open_sum < 0)
        throw std::invalid_argument("label_of: open_sum must be >= 0");
    if (stones == 2) return Label::A2;
    if (stones == 1) return open_sum >= 1 ? Label::A11 : Label::A10;
    if (open_sum >= 2) return Label::A02;
    return open_sum == 1 ? Label::A01 : Label::A00;
}

const char* label_name(Label lab) {
    switch (lab) {
    case Label::A2: return "A2";
    case Label::A11: return "A11";
    case Label::A10: return "A10";
    case Label::A02: return "A02";
    case Label::A01: return "A01";
    case Label::A00: return "A00";
    }
    throw std::logic_error("label_name: bad label");
}

std::optional<Label> parse_label(std::string_view name) {
    for (Label lab : kAllLabels)
        if (name == label_name(lab)) return lab;
    return std::nullopt;
}

int column_weight(std::span<const Label> column) {
    int total = 0;
    for (Label lab : column) total += stones_on(lab);
    return total;
}

namespace {

// (a, b) stacked vertically clash iff one side pins its open-neighborhood
// total and the other side's stones alone already exceed that pin.
bool pair_prohibited(Label a, Label b) {
    const NeighborRule ra = neighbor_rule(a);
    if (ra.exact && stones_on(b) > ra.bound) return true;
    const NeighborRule rb = neighbor_rule(b);
    if (rb.exact && stones_on(a) > rb.bound) return true;
    return false;
}

// (a, b, c) clash iff both adjacent pairs pass but b's pinned total is
// exceeded by its two in-column neighbors combined.
bool triple_prohibited(Label a, Label b, Label c) {
    if (pair_prohibited(a, b) || pair_prohibited(b, c)) return false;
    const NeighborRule rb = neighbor_rule(b);
    return rb.exact && stones_on(a) + stones_on(c) > rb.bound;
}

// Reference copy of the pattern tables, spelled out label by label so a
// regression in the derivation above cannot pass silently.
const ProhibitedPatterns& reference_prohibited_patterns() {
    using L = Label;
    static const ProhibitedPatterns ref = {
        {
            {L::A2, L::A10}, {L::A2, L::A01}, {L::A2, L::A00},
            {L::A11, L::A10}, {L::A11, L::A00},
            {L::A10, L::A2}, {L::A10, L::A11}, {L::A10, L::A10}, {L::A10, L::A00},
            {L::A01, L::A2},
            {L::A00, L::A2}, {L::A00, L::A11}, {L::A00, L::A10},
        },
        {
            {L::A11, L::A01, L::A11},
            {L::A11, L::A01, L::A10},
            {L::A10, L::A01, L::A11},
            {L::A10, L::A01, L::A10},
        },
    };
    return ref;
}

struct PatternTables {
    bool pair[kLabelCount][kLabelCount] = {};
    bool triple[kLabelCount][kLabelCount][kLabelCount] = {};
};

const PatternTables& pattern_tables() {
    static const PatternTables tables = [] {
        const ProhibitedPatterns& pats = prohibited_patterns();
        PatternTables t;
        for (const auto& p : pats.pairs)
            t.pair[static_cast<int>(p[0])][static_cast<int>(p[1])] = true;
        for (const auto& p : pats.triples)
            t.triple[static_cast<int>(p[0])][static_cast<int>(p[1])][static_cast<int>(p[2])] =
                true;
        return t;
    }();
    return tables;
}

} // namespace

ProhibitedPatterns derive_prohibited_patterns() {
    ProhibitedPatterns out;
    for (Label a : kAllLabels)
        for (Label b : kAllLabels)
            if (pair_prohibited(a, b)) out.pairs.push_back({a, b});
    for (Label a : kAllLabels)
        for (Label b : kAllLabels)
            for (Label c : kAllLabels)
                if (triple_prohibited(a, b, c)) out.triples.push_back({a, b, c});
    return out;
}

const ProhibitedPatterns& prohibited_patterns() {
    static const ProhibitedPatterns checked = [] {
        ProhibitedPatterns derived = derive_prohibited_patterns();
        const ProhibitedPatterns& ref = reference_prohibited_patterns();
        auto sorted = [](auto v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(derived.pairs) != sorted(ref.pairs) ||
            sorted(derived.triples) != sorted(ref.triples))
            throw std::logic_error(
                "prohibited-pattern self-check failed: derivation disagrees with the "
                "reference tables");
        return derived;
    }();
    return checked;
}

bool is_feasible_column(std::span<const Label> column) {
    if (column.empty()) throw std::invalid_argument("is_feasible_column: empty column");
    const PatternTables& t = pattern_tables();
    for (std::size_t k = 1; k < column.size(); ++k)
        if (t.pair[static_cast<int>(column[k - 1])][static_cast<int>(column[k])]) return false;
    for (std::size_t k = 2; k < column.size(); ++k)
        if (t.triple[static_cast<int>(column[k - 2])][static_cast<int>(column[k - 1])]
                    [static_cast<int>(column[k])])
            return false;
    return true;
}

StateSpace StateSpace::enumerate(int rows, int max_rows) {
    if (rows < 1) throw std::invalid_argument("StateSpace: rows must be >= 1");
    if (rows > max_rows)
        throw ResourceLimitError("StateSpace: " + std::to_string(rows) +
                                 " rows exceeds the configured limit of " +
                                 std::to_string(max_rows));

    const PatternTables& t = pattern_tables();
    StateSpace space;
    space.rows_ = rows;

    // Depth-first extension, trying labels in canonical order, emits states
    // in lexicographic order directly.
    std::vector<Label> cur;
    cur.reserve(rows);
    auto emit = [&space](const std::vector<Label>& column) {
        std::uint64_t key = 0;
        int weight = 0;
        for (Label lab : column) {
            key = key * kLabelCount + static_cast<int>(lab);
            weight += stones_on(lab);
            space.labels_.push_back(lab);
            space.stones_.push_back(static_cast<std::uint8_t>(stones_on(lab)));
        }
        space.keys_.push_back(key);
        space.weights_.push_back(weight);
    };
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == rows) {
            emit(cur);
            return;
        }
        for (Label lab : kAllLabels) {
            if (depth >= 1 &&
                t.pair[static_cast<int>(cur[depth - 1])][static_cast<int>(lab)])
                continue;
            if (depth >= 2 &&
                t.triple[static_cast<int>(cur[depth - 2])][static_cast<int>(cur[depth - 1])]
                        [static_cast<int>(lab)])
                continue;
            cur.push_back(lab);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);

    space.count_ = space.keys_.size();
    return space;
}

std::span<const Label> StateSpace::state(std::size_t idx) const {
    if (idx >= count_) throw std::out_of_range("StateSpace::state: index out of bounds");
    return {labels_.data() + idx * rows_, static_cast<std::size_t>(rows_)};
}

std::span<const std::uint8_t> StateSpace::stones_of(std::size_t idx) const {
    if (idx >= count_) throw std::out_of_range("StateSpace::stones_of: index out of bounds");
    return {stones_.data() + idx * rows_, static_cast<std::size_t>(rows_)};
}

int StateSpace::column_weight(std::size_t idx) const {
    if (idx >= count_) throw std::out_of_range("StateSpace::column_weight: index out of bounds");
    return weights_[idx];
}

std::optional<std::size_t> StateSpace::index_of(std::span<const Label> column) const {
    if (static_cast<int>(column.size()) != rows_) return std::nullopt;
    std::uint64_t key = 0;
    for (Label lab : column) key = key * kLabelCount + static_cast<int>(lab);
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
}

std::vector<std::uint32_t> StateSpace::dominated_states() const {
    std::vector<std::uint32_t> out;
    for (std::size_t idx = 0; idx < count_; ++idx) {
        bool ok = true;
        for (Label lab : state(idx))
            if (lab != Label::A2 && lab != Label::A11 && lab != Label::A02) {
                ok = false;
                break;
            }
        if (ok) out.push_back(static_cast<std::uint32_t>(idx));
    }
    return out;
}

std::string StateSpace::state_name(std::size_t idx) const {
    std::string out;
    for (Label lab : state(idx)) {
        if (!out.empty()) out.push_back(',');
        out += label_name(lab);
    }
    return out;
}

} // namespace grid2dom

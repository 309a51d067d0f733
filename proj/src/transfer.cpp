#include "grid2dom/transfer.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace grid2dom {

bool compatible(std::span<const Label> prev, std::span<const Label> next) {
    if (prev.empty() || prev.size() != next.size())
        throw std::invalid_argument("compatible: columns must be nonempty and equally tall");
    const std::size_t rows = prev.size();
    for (std::size_t k = 0; k < rows; ++k) {
        const int stones_next = stones_on(next[k]);
        // (a) the new column must top up whatever prev[k] still owes.
        switch (prev[k]) {
        case Label::A10:
        case Label::A01:
            if (stones_next < 1) return false;
            break;
        case Label::A00:
            if (stones_next < 2) return false;
            break;
        default:
            break; // A2/A11/A02 are already settled
        }
        // (b) next[k] must be the label its visible neighborhood dictates:
        // left vertex plus the in-column neighbors of the new column.
        int open_sum = stones_on(prev[k]);
        if (k > 0) open_sum += stones_on(next[k - 1]);
        if (k + 1 < rows) open_sum += stones_on(next[k + 1]);
        if (label_of(stones_next, open_sum) != next[k]) return false;
    }
    return true;
}

ColumnState virtual_start_column(int rows) {
    if (rows < 1) throw std::invalid_argument("virtual_start_column: rows must be >= 1");
    return ColumnState(static_cast<std::size_t>(rows), Label::A02);
}

TransferTable TransferTable::build(const StateSpace& space, std::uint64_t memory_cap_bytes) {
    TransferTable table;
    table.order_ = space.size();
    table.rows_ = space.rows();
    table.words_per_row_ = (table.order_ + 63) / 64;

    const std::uint64_t bytes =
        static_cast<std::uint64_t>(table.order_) * table.words_per_row_ * sizeof(std::uint64_t);
    if (bytes > memory_cap_bytes)
        throw ResourceLimitError("transfer table for " + std::to_string(table.order_) +
                                 " states needs " + std::to_string(bytes) +
                                 " bytes, over the cap of " + std::to_string(memory_cap_bytes));

    const ColumnState start = virtual_start_column(table.rows_);
    const auto start_idx = space.index_of(start);
    if (!start_idx)
        throw std::logic_error("transfer table: all-A02 column missing from the state space");
    table.virtual_start_ = *start_idx;

    table.bits_.assign(table.order_ * table.words_per_row_, 0);
    for (std::size_t target = 0; target < table.order_; ++target) {
        std::uint64_t* row = table.bits_.data() + target * table.words_per_row_;
        const auto next = space.state(target);
        for (std::size_t pred = 0; pred < table.order_; ++pred)
            if (compatible(space.state(pred), next)) row[pred >> 6] |= 1ull << (pred & 63);
    }
    return table;
}

bool TransferTable::allowed(std::size_t pred, std::size_t target) const {
    if (pred >= order_ || target >= order_)
        throw std::out_of_range("TransferTable::allowed: index out of bounds");
    return (bits_[target * words_per_row_ + (pred >> 6)] >> (pred & 63)) & 1u;
}

std::span<const std::uint64_t> TransferTable::pred_bits(std::size_t target) const {
    if (target >= order_) throw std::out_of_range("TransferTable::pred_bits: index out of bounds");
    return {bits_.data() + target * words_per_row_, words_per_row_};
}

namespace {

constexpr char kCacheMagic[4] = {'G', '2', 'D', 'M'};
constexpr std::uint32_t kCacheVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

bool get_u32(std::istream& in, std::uint32_t& v) {
    unsigned char buf[4];
    if (!in.read(reinterpret_cast<char*>(buf), 4)) return false;
    v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | buf[i];
    return true;
}

bool get_u64(std::istream& in, std::uint64_t& v) {
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8)) return false;
    v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
    return true;
}

} // namespace

void TransferTable::save(const std::filesystem::path& file) const {
    std::string header;
    header.append(kCacheMagic, 4);
    put_u32(header, kCacheVersion);
    put_u32(header, static_cast<std::uint32_t>(rows_));
    put_u64(header, order_);
    put_u64(header, words_per_row_);

    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + file.string());
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    std::string word;
    word.reserve(8);
    for (std::uint64_t w : bits_) {
        word.clear();
        put_u64(word, w);
        out.write(word.data(), 8);
    }
    out.flush();
    if (!out) throw std::runtime_error("failed writing cache file: " + file.string());
}

std::optional<TransferTable> TransferTable::load(const std::filesystem::path& file,
                                                 const StateSpace& space) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;

    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kCacheMagic, 4) != 0) return std::nullopt;
    std::uint32_t version = 0, rows = 0;
    std::uint64_t order = 0, words = 0;
    if (!get_u32(in, version) || !get_u32(in, rows) || !get_u64(in, order) || !get_u64(in, words))
        return std::nullopt;
    if (version != kCacheVersion) return std::nullopt;
    if (rows != static_cast<std::uint32_t>(space.rows()) || order != space.size() ||
        words != (space.size() + 63) / 64)
        return std::nullopt;

    TransferTable table;
    table.order_ = order;
    table.rows_ = static_cast<int>(rows);
    table.words_per_row_ = words;
    table.bits_.resize(order * words);
    for (std::uint64_t& w : table.bits_)
        if (!get_u64(in, w)) return std::nullopt; // truncated
    // Reject trailing garbage so a corrupt append is caught too.
    char extra;
    if (in.read(&extra, 1)) return std::nullopt;

    const auto start_idx = space.index_of(virtual_start_column(table.rows_));
    if (!start_idx) return std::nullopt;
    table.virtual_start_ = *start_idx;
    return table;
}

MinPlusMatrix as_minplus_matrix(const TransferTable& table, const StateSpace& space,
                                std::uint64_t memory_cap_bytes) {
    if (table.order() != space.size() || table.rows() != space.rows())
        throw std::invalid_argument("as_minplus_matrix: table and space disagree");
    const std::size_t order = table.order();
    const std::uint64_t bytes =
        static_cast<std::uint64_t>(order) * order * sizeof(std::int64_t);
    if (bytes > memory_cap_bytes)
        throw ResourceLimitError("min-plus matrix of order " + std::to_string(order) +
                                 " needs " + std::to_string(bytes) + " bytes, over the cap of " +
                                 std::to_string(memory_cap_bytes));

    MinPlusMatrix mat;
    mat.order = order;
    mat.cost.assign(order * order, kInfiniteWeight);
    for (std::size_t target = 0; target < order; ++target) {
        const std::int64_t w = space.column_weight(target);
        const auto row = table.pred_bits(target);
        for (std::size_t word = 0; word < row.size(); ++word) {
            std::uint64_t bits = row[word];
            while (bits) {
                const std::size_t pred = (word << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                mat.cost[pred * order + target] = w;
            }
        }
    }
    return mat;
}

} // namespace grid2dom

#include "grid2dom/solver.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace grid2dom {

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
    if (a == kInfiniteWeight || b == kInfiniteWeight) return kInfiniteWeight;
    std::int64_t sum;
    if (__builtin_add_overflow(a, b, &sum)) return kInfiniteWeight;
    return sum;
}

namespace {

void check_step_args(const StateSpace& space, std::span<const std::int64_t> in,
                     std::span<std::int64_t> out) {
    if (in.size() != space.size() || out.size() != space.size())
        throw std::invalid_argument("dp_step: weight vectors must match the state count");
    if (in.data() == out.data())
        throw std::invalid_argument("dp_step: in and out must be distinct buffers");
}

// Smallest predecessor weight for one target row of the transfer table.
// Scanning words in order and taking strict improvements keeps the smallest
// achieving index, which is what witness tie-breaking wants.
inline std::int64_t min_pred(std::span<const std::uint64_t> row,
                             std::span<const std::int64_t> in, std::uint32_t* arg) {
    std::int64_t best = kInfiniteWeight;
    std::uint32_t best_idx = UINT32_MAX;
    for (std::size_t word = 0; word < row.size(); ++word) {
        std::uint64_t bits = row[word];
        while (bits) {
            const std::size_t pred = (word << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            if (in[pred] < best) {
                best = in[pred];
                best_idx = static_cast<std::uint32_t>(pred);
            }
        }
    }
    if (arg) *arg = best == kInfiniteWeight ? UINT32_MAX : best_idx;
    return best;
}

} // namespace

void dp_step(const StateSpace& space, const TransferTable& table,
             std::span<const std::int64_t> in, std::span<std::int64_t> out) {
    check_step_args(space, in, out);
    for (std::size_t j = 0; j < space.size(); ++j)
        out[j] = saturating_add(min_pred(table.pred_bits(j), in, nullptr),
                                space.column_weight(j));
}

void dp_step_recording(const StateSpace& space, const TransferTable& table,
                       std::span<const std::int64_t> in, std::span<std::int64_t> out,
                       std::span<std::uint32_t> pred_out) {
    check_step_args(space, in, out);
    if (pred_out.size() != space.size())
        throw std::invalid_argument("dp_step_recording: pred vector must match the state count");
    for (std::size_t j = 0; j < space.size(); ++j) {
        std::uint32_t arg = UINT32_MAX;
        out[j] = saturating_add(min_pred(table.pred_bits(j), in, &arg), space.column_weight(j));
        pred_out[j] = arg;
    }
}

namespace {

TransferTable make_table(const StateSpace& space, const RunConfig& config) {
    if (config.cache_dir) {
        const auto file =
            *config.cache_dir / ("transfer-m" + std::to_string(space.rows()) + ".g2dm");
        if (auto cached = TransferTable::load(file, space)) return std::move(*cached);
        TransferTable table = TransferTable::build(space, config.memory_cap_bytes);
        std::filesystem::create_directories(*config.cache_dir);
        table.save(file); // missing or corrupt cache entry: rebuilt and replaced
        return table;
    }
    return TransferTable::build(space, config.memory_cap_bytes);
}

} // namespace

Solver::Solver(int rows, RunConfig config)
    : config_(std::move(config)), space_(StateSpace::enumerate(rows)),
      table_(make_table(space_, config_)), dominated_(space_.dominated_states()) {}

std::vector<std::int64_t> Solver::seed() const {
    // Weight 0 on the virtual start (the all-A02 "no column yet" state),
    // unreachable everywhere else.
    std::vector<std::int64_t> w(space_.size(), kInfiniteWeight);
    w[table_.virtual_start()] = 0;
    return w;
}

std::int64_t Solver::best_dominated(std::span<const std::int64_t> weights) const {
    std::int64_t best = kInfiniteWeight;
    for (std::uint32_t idx : dominated_)
        if (weights[idx] < best) best = weights[idx];
    return best;
}

std::int64_t Solver::solve(int cols) const {
    if (cols < 1) throw std::invalid_argument("solve: cols must be >= 1");
    std::vector<std::int64_t> cur = seed(), next(space_.size());
    for (int step = 0; step < cols; ++step) {
        dp_step(space_, table_, cur, next);
        cur.swap(next);
    }
    const std::int64_t gamma = best_dominated(cur);
    if (gamma == kInfiniteWeight)
        throw std::logic_error("solve: no dominated state reachable"); // cannot happen for n >= 1
    return gamma;
}

SolveResult Solver::solve_with_witness(int cols) const {
    if (cols < 1) throw std::invalid_argument("solve_with_witness: cols must be >= 1");

    const std::uint64_t pred_bytes = static_cast<std::uint64_t>(cols) * space_.size() *
                                     sizeof(std::uint32_t);
    if (pred_bytes > config_.memory_cap_bytes)
        throw ResourceLimitError("witness back-pointers need " + std::to_string(pred_bytes) +
                                 " bytes, over the cap of " +
                                 std::to_string(config_.memory_cap_bytes) +
                                 "; raise the memory cap or drop the witness");

    std::vector<std::vector<std::uint32_t>> preds(
        static_cast<std::size_t>(cols), std::vector<std::uint32_t>(space_.size()));
    std::vector<std::int64_t> cur = seed(), next(space_.size());
    for (int step = 0; step < cols; ++step) {
        dp_step_recording(space_, table_, cur, next, preds[static_cast<std::size_t>(step)]);
        cur.swap(next);
    }

    // Final state: smallest index among dominated states achieving gamma.
    std::int64_t gamma = kInfiniteWeight;
    std::uint32_t at = UINT32_MAX;
    for (std::uint32_t idx : dominated_)
        if (cur[idx] < gamma) {
            gamma = cur[idx];
            at = idx;
        }
    if (gamma == kInfiniteWeight)
        throw std::logic_error("solve_with_witness: no dominated state reachable");

    // Walk the chain right-to-left; column k of the grid gets the stones of
    // the state chosen at step k.
    StoneGrid grid(space_.rows(), cols);
    std::uint32_t state = at;
    for (int col = cols; col >= 1; --col) {
        const auto stones = space_.stones_of(state);
        for (int r = 1; r <= space_.rows(); ++r)
            grid.set_stone(r, col, stones[static_cast<std::size_t>(r - 1)]);
        state = preds[static_cast<std::size_t>(col - 1)][state];
        if (col > 1 && state == UINT32_MAX)
            throw std::logic_error("solve_with_witness: broken predecessor chain");
    }

    // The witness must satisfy the grid model on its own terms.
    if (!is_dominating(grid) || weight(grid) != gamma)
        throw std::logic_error("solve_with_witness: extracted witness failed verification");
    return {gamma, std::move(grid)};
}

std::vector<std::int64_t> Solver::gamma_table(int cols_max) const {
    if (cols_max < 1) throw std::invalid_argument("gamma_table: cols_max must be >= 1");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(cols_max));
    std::vector<std::int64_t> cur = seed(), next(space_.size());
    for (int n = 1; n <= cols_max; ++n) {
        dp_step(space_, table_, cur, next);
        cur.swap(next);
        out.push_back(best_dominated(cur));
    }
    return out;
}

namespace {

// w <- w (x) M in the (min, +) semiring.
void vec_times_matrix(std::vector<std::int64_t>& w, const MinPlusMatrix& m,
                      std::vector<std::int64_t>& scratch) {
    const std::size_t order = m.order;
    scratch.assign(order, kInfiniteWeight);
    for (std::size_t i = 0; i < order; ++i) {
        const std::int64_t wi = w[i];
        if (wi == kInfiniteWeight) continue;
        const std::int64_t* row = m.cost.data() + i * order;
        for (std::size_t j = 0; j < order; ++j) {
            if (row[j] == kInfiniteWeight) continue;
            const std::int64_t cand = wi + row[j];
            if (cand < scratch[j]) scratch[j] = cand;
        }
    }
    w.swap(scratch);
}

// C <- A (x) B in the (min, +) semiring.
void matrix_times_matrix(const MinPlusMatrix& a, const MinPlusMatrix& b, MinPlusMatrix& c) {
    const std::size_t order = a.order;
    c.order = order;
    c.cost.assign(order * order, kInfiniteWeight);
    for (std::size_t i = 0; i < order; ++i) {
        std::int64_t* out_row = c.cost.data() + i * order;
        const std::int64_t* a_row = a.cost.data() + i * order;
        for (std::size_t k = 0; k < order; ++k) {
            const std::int64_t aik = a_row[k];
            if (aik == kInfiniteWeight) continue;
            const std::int64_t* b_row = b.cost.data() + k * order;
            for (std::size_t j = 0; j < order; ++j) {
                if (b_row[j] == kInfiniteWeight) continue;
                const std::int64_t cand = aik + b_row[j];
                if (cand < out_row[j]) out_row[j] = cand;
            }
        }
    }
}

} // namespace

std::int64_t Solver::solve_minplus_power(std::int64_t cols) const {
    if (cols < 1) throw std::invalid_argument("solve_minplus_power: cols must be >= 1");
    // Keeps every intermediate path weight (bounded by 2*rows*cols) far from
    // the int64 sentinel, so plain additions below cannot overflow.
    if (cols > (std::int64_t{1} << 50))
        throw std::invalid_argument("solve_minplus_power: cols must be <= 2^50");

    // Peak allocation: the step matrix, its running square, and a scratch
    // product buffer.
    const std::uint64_t matrix_bytes =
        static_cast<std::uint64_t>(space_.size()) * space_.size() * sizeof(std::int64_t);
    if (matrix_bytes > config_.memory_cap_bytes / 3)
        throw ResourceLimitError("min-plus powering needs 3 matrices of " +
                                 std::to_string(matrix_bytes) + " bytes each, over the cap of " +
                                 std::to_string(config_.memory_cap_bytes));

    MinPlusMatrix power = as_minplus_matrix(table_, space_, config_.memory_cap_bytes);
    MinPlusMatrix product, scratch_m;
    std::vector<std::int64_t> w = seed(), scratch_v;

    // w (x) A^cols by binary decomposition of the exponent; only the row
    // vector ever multiplies into the accumulated squares.
    std::uint64_t e = static_cast<std::uint64_t>(cols);
    while (true) {
        if (e & 1) vec_times_matrix(w, power, scratch_v);
        e >>= 1;
        if (!e) break;
        matrix_times_matrix(power, power, product);
        power.cost.swap(product.cost);
    }

    const std::int64_t gamma = best_dominated(w);
    if (gamma == kInfiniteWeight)
        throw std::logic_error("solve_minplus_power: no dominated state reachable");
    return gamma;
}

std::optional<LinearTail> Solver::detect_linear_tail(int cols_max) const {
    if (cols_max < 2) throw std::invalid_argument("detect_linear_tail: cols_max must be >= 2");
    const std::vector<std::int64_t> gamma = gamma_table(cols_max);

    // d[i] = gamma(i+1) - gamma(i), valid for i in 1..cols_max-1 (1-based n).
    auto diff = [&gamma](int i) { return gamma[static_cast<std::size_t>(i)] -
                                         gamma[static_cast<std::size_t>(i - 1)]; };

    for (int start = 1; start <= cols_max; ++start) {
        for (int period = 1; period <= cols_max / 4; ++period) {
            if (cols_max - start < 3 * period) break; // need three full periods in view
            bool ok = true;
            for (int i = start; i + period <= cols_max - 1 && ok; ++i)
                if (diff(i) != diff(i + period)) ok = false;
            if (!ok) continue;
            LinearTail tail;
            tail.start_n = start;
            tail.period = period;
            for (int k = 0; k < period; ++k) tail.increments.push_back(diff(start + k));
            return tail;
        }
    }
    return std::nullopt;
}

std::int64_t solve(int rows, int cols, const RunConfig& config) {
    return Solver(rows, config).solve(cols);
}

SolveResult solve_with_witness(int rows, int cols, const RunConfig& config) {
    return Solver(rows, config).solve_with_witness(cols);
}

std::optional<LinearTail> detect_linear_tail(int rows, int cols_max, const RunConfig& config) {
    return Solver(rows, config).detect_linear_tail(cols_max);
}

} // namespace grid2dom

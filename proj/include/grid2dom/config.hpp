#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace grid2dom {

// Saturating "no path / not reachable" sentinel shared by the DP weight
// vectors and the min-plus matrices. Additions clamp here instead of
// wrapping; see saturating_add in solver.hpp.
inline constexpr std::int64_t kInfiniteWeight = std::numeric_limits<std::int64_t>::max();

// Thrown when a computation would exceed a configured resource budget
// (state-space row limit, transfer-table memory cap, brute-force cell cap).
// The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Knobs shared by the solver, the oracles and the CLI.
struct RunConfig {
    // Budget for the big allocations (transfer-table bitsets, min-plus
    // matrices, witness back-pointers). 256 MiB by default.
    std::uint64_t memory_cap_bytes = 256ull << 20;

    // brute_force() refuses grids with more than this many cells.
    int brute_force_cell_cap = 14;

    // Where to keep the optional transfer-table cache. Unset = no caching.
    std::optional<std::filesystem::path> cache_dir;

    // Default rendering for CLI output: "csv", "json" or "ascii".
    std::string output_format = "csv";
};

} // namespace grid2dom

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grid2dom {

// A stone assignment f : V(G_{rows,cols}) -> {0,1,2} on the grid graph whose
// vertices are addressed 1-based as (row, col), row 1 at the top. Storage is
// row-major. f is a {2}-dominating function when every vertex's closed
// neighborhood carries at least 2 stones in total.
struct StoneGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> stones; // rows*cols entries, each 0, 1 or 2

    StoneGrid() = default;
    StoneGrid(int rows_, int cols_); // zero-filled; throws std::invalid_argument

    int stone_at(int r, int c) const;          // 1-based; throws std::out_of_range
    void set_stone(int r, int c, int value);   // value must be 0, 1 or 2
};

// The 2..4 grid neighbors of (r, c), in (up, left, right, down) order.
// Throws std::out_of_range if (r, c) is not a vertex of the rows x cols grid.
std::vector<std::pair<int, int>> neighbors(int rows, int cols, int r, int c);

// f(v) plus the stones on all grid neighbors of v.
int closed_neighborhood_sum(const StoneGrid& g, int r, int c);

// True iff every vertex has closed_neighborhood_sum >= 2.
bool is_dominating(const StoneGrid& g);

// Total number of stones placed.
std::int64_t weight(const StoneGrid& g);

// ceil(2*rows*cols / (max_degree + 1)): no {2}-dominating function can weigh
// less, since one stone covers at most (degree + 1) closed neighborhoods.
std::int64_t degree_lower_bound(int rows, int cols);

// Text forms. ASCII uses one char per vertex: '.' = 0, '/' = 1, '#' = 2,
// one row per line. JSON is {"m": rows, "n": cols, "stones": [[...], ...]}.
// Parsers throw std::invalid_argument on malformed input.
std::string to_ascii(const StoneGrid& g);
StoneGrid grid_from_ascii(const std::string& text);
std::string to_json_string(const StoneGrid& g);
StoneGrid grid_from_json_string(const std::string& text);

} // namespace grid2dom

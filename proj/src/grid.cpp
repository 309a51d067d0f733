#include "grid2dom/grid.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace grid2dom {

namespace {

void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
}

void check_vertex(int rows, int cols, int r, int c) {
    if (r < 1 || r > rows || c < 1 || c > cols)
        throw std::out_of_range("vertex (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " grid");
}

void check_stone(int value) {
    if (value < 0 || value > 2)
        throw std::invalid_argument("stone value must be 0, 1 or 2, got " + std::to_string(value));
}

} // namespace

StoneGrid::StoneGrid(int rows_, int cols_) : rows(rows_), cols(cols_) {
    check_dims(rows_, cols_);
    stones.assign(static_cast<std::size_t>(rows) * cols, 0);
}

int StoneGrid::stone_at(int r, int c) const {
    check_vertex(rows, cols, r, c);
    return stones[static_cast<std::size_t>(r - 1) * cols + (c - 1)];
}

void StoneGrid::set_stone(int r, int c, int value) {
    check_vertex(rows, cols, r, c);
    check_stone(value);
    stones[static_cast<std::size_t>(r - 1) * cols + (c - 1)] = static_cast<std::uint8_t>(value);
}

std::vector<std::pair<int, int>> neighbors(int rows, int cols, int r, int c) {
    check_dims(rows, cols);
    check_vertex(rows, cols, r, c);
    std::vector<std::pair<int, int>> out;
    out.reserve(4);
    if (r > 1) out.emplace_back(r - 1, c);
    if (c > 1) out.emplace_back(r, c - 1);
    if (c < cols) out.emplace_back(r, c + 1);
    if (r < rows) out.emplace_back(r + 1, c);
    return out;
}

int closed_neighborhood_sum(const StoneGrid& g, int r, int c) {
    check_vertex(g.rows, g.cols, r, c);
    const auto* s = g.stones.data();
    const std::size_t idx = static_cast<std::size_t>(r - 1) * g.cols + (c - 1);
    int sum = s[idx];
    if (r > 1) sum += s[idx - g.cols];
    if (c > 1) sum += s[idx - 1];
    if (c < g.cols) sum += s[idx + 1];
    if (r < g.rows) sum += s[idx + g.cols];
    return sum;
}

bool is_dominating(const StoneGrid& g) {
    check_dims(g.rows, g.cols);
    for (int r = 1; r <= g.rows; ++r)
        for (int c = 1; c <= g.cols; ++c)
            if (closed_neighborhood_sum(g, r, c) < 2) return false;
    return true;
}

std::int64_t weight(const StoneGrid& g) {
    std::int64_t total = 0;
    for (std::uint8_t s : g.stones) total += s;
    return total;
}

std::int64_t degree_lower_bound(int rows, int cols) {
    check_dims(rows, cols);
    const int lo = rows < cols ? rows : cols;
    const int hi = rows < cols ? cols : rows;
    int max_degree;
    if (lo == 1) {
        if (hi == 1) max_degree = 0;      // isolated vertex
        else if (hi == 2) max_degree = 1; // a single edge
        else max_degree = 2;              // interior of a path
    } else if (lo == 2) {
        max_degree = (hi == 2) ? 2 : 3;   // C4, or a ladder interior
    } else {
        max_degree = 4;
    }
    const std::int64_t cells = static_cast<std::int64_t>(rows) * cols;
    return (2 * cells + max_degree) / (max_degree + 1); // ceil(2*cells/(deg+1))
}

std::string to_ascii(const StoneGrid& g) {
    check_dims(g.rows, g.cols);
    static const char glyph[3] = {'.', '/', '#'};
    std::string out;
    out.reserve(static_cast<std::size_t>(g.rows) * (g.cols + 1));
    for (int r = 1; r <= g.rows; ++r) {
        for (int c = 1; c <= g.cols; ++c) out.push_back(glyph[g.stone_at(r, c)]);
        out.push_back('\n');
    }
    return out;
}

StoneGrid grid_from_ascii(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    if (lines.empty()) throw std::invalid_argument("ascii grid: no rows");
    const int rows = static_cast<int>(lines.size());
    const int cols = static_cast<int>(lines[0].size());
    StoneGrid g(rows, cols);
    for (int r = 1; r <= rows; ++r) {
        if (static_cast<int>(lines[r - 1].size()) != cols)
            throw std::invalid_argument("ascii grid: ragged row " + std::to_string(r));
        for (int c = 1; c <= cols; ++c) {
            switch (lines[r - 1][c - 1]) {
            case '.': break;
            case '/': g.set_stone(r, c, 1); break;
            case '#': g.set_stone(r, c, 2); break;
            default:
                throw std::invalid_argument(std::string("ascii grid: bad character '") +
                                            lines[r - 1][c - 1] + "'");
            }
        }
    }
    return g;
}

std::string to_json_string(const StoneGrid& g) {
    check_dims(g.rows, g.cols);
    nlohmann::ordered_json j;
    j["m"] = g.rows;
    j["n"] = g.cols;
    auto rows = nlohmann::ordered_json::array();
    for (int r = 1; r <= g.rows; ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 1; c <= g.cols; ++c) row.push_back(g.stone_at(r, c));
        rows.push_back(std::move(row));
    }
    j["stones"] = std::move(rows);
    return j.dump();
}

StoneGrid grid_from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("json grid: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("stones"))
        throw std::invalid_argument("json grid: need keys m, n, stones");
    if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
        throw std::invalid_argument("json grid: m and n must be integers");
    const int rows = j["m"].get<int>();
    const int cols = j["n"].get<int>();
    StoneGrid g(rows, cols); // validates dimensions
    const auto& data = j["stones"];
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw std::invalid_argument("json grid: stones must hold m rows");
    for (int r = 1; r <= rows; ++r) {
        const auto& row = data[r - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("json grid: row " + std::to_string(r) +
                                        " must hold n entries");
        for (int c = 1; c <= cols; ++c) {
            if (!row[c - 1].is_number_integer())
                throw std::invalid_argument("json grid: stones must be integers");
            g.set_stone(r, c, row[c - 1].get<int>()); // validates 0..2
        }
    }
    return g;
}

} // namespace grid2dom

#include "grid2dom/transfer.hpp"

#include "grid2dom/config.hpp"
#include "grid2dom/solver.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace grid2dom;
using L = Label;

namespace {

// Hand-evaluated single-row transfer matrix (source row, target column, in
// canonical label order A2, A11, A10, A02, A01, A00). Worked out by hand from
// the predicate before the implementation existed.
const bool kGolden1Row[6][6] = {
    // to:  A2     A11    A10    A02    A01    A00      from:
    {true,  true,  false, true,  false, false}, // A2
    {true,  true,  false, false, true,  false}, // A11
    {true,  true,  false, false, false, false}, // A10
    {true,  false, true,  false, false, true }, // A02
    {true,  false, true,  false, false, false}, // A01
    {true,  false, false, false, false, false}, // A00
};

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("single-row transfer matrix matches the hand-derived fixture") {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const ColumnState prev{kAllLabels[static_cast<std::size_t>(i)]};
            const ColumnState next{kAllLabels[static_cast<std::size_t>(j)]};
            CHECK_MESSAGE(compatible(prev, next) == kGolden1Row[i][j],
                          "from ", label_name(prev[0]), " to ", label_name(next[0]));
        }

    const StateSpace space = StateSpace::enumerate(1);
    const TransferTable table = TransferTable::build(space);
    REQUIRE(table.order() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(table.allowed(i, j) == kGolden1Row[i][j]);
}

TEST_CASE("hand-evaluated 4-row cases") {
    const ColumnState next{L::A11, L::A02, L::A01, L::A10};
    CHECK(compatible(ColumnState{L::A11, L::A11, L::A02, L::A02}, next));
    CHECK(compatible(ColumnState{L::A11, L::A2, L::A02, L::A01}, next));
    CHECK(compatible(ColumnState{L::A2, L::A11, L::A02, L::A01}, next));
    CHECK_FALSE(compatible(ColumnState{L::A02, L::A2, L::A02, L::A11}, next));
}

TEST_CASE("compatible argument validation") {
    CHECK_THROWS_AS(compatible(ColumnState{}, ColumnState{}), std::invalid_argument);
    CHECK_THROWS_AS(compatible(ColumnState{L::A2}, ColumnState{L::A2, L::A2}),
                    std::invalid_argument);
}

TEST_CASE("virtual start column") {
    CHECK(virtual_start_column(3) == ColumnState{L::A02, L::A02, L::A02});
    CHECK_THROWS_AS(virtual_start_column(0), std::invalid_argument);

    // The all-A2 column accepts any predecessor; the all-A02 start accepts it
    // in particular, for every height.
    for (int m = 1; m <= 5; ++m) {
        const ColumnState start = virtual_start_column(m);
        const ColumnState full(static_cast<std::size_t>(m), L::A2);
        CHECK(compatible(start, full));
        const StateSpace space = StateSpace::enumerate(m);
        for (std::size_t i = 0; i < space.size(); ++i) {
            const auto st = space.state(i);
            CHECK(compatible(ColumnState(st.begin(), st.end()), full));
        }
    }
}

TEST_CASE("transfer predicate is symmetric under vertical flip") {
    const StateSpace space = StateSpace::enumerate(3);
    auto flipped = [&](std::size_t idx) {
        const auto st = space.state(idx);
        return ColumnState(st.rbegin(), st.rend());
    };
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j) {
            const auto a = space.state(i), b = space.state(j);
            CHECK(compatible(ColumnState(a.begin(), a.end()),
                             ColumnState(b.begin(), b.end())) ==
                  compatible(flipped(i), flipped(j)));
        }
}

TEST_CASE("transfer table matches the predicate pair by pair") {
    const StateSpace space = StateSpace::enumerate(2);
    const TransferTable table = TransferTable::build(space);
    CHECK(table.rows() == 2);
    CHECK(table.order() == space.size());
    CHECK(table.virtual_start() ==
          *space.index_of(virtual_start_column(2)));
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto a = space.state(i);
        for (std::size_t j = 0; j < space.size(); ++j) {
            const auto b = space.state(j);
            CHECK(table.allowed(i, j) == compatible(ColumnState(a.begin(), a.end()),
                                                    ColumnState(b.begin(), b.end())));
        }
    }
    CHECK_THROWS_AS(table.allowed(0, space.size()), std::out_of_range);

    // pred_bits rows agree with allowed().
    for (std::size_t j = 0; j < space.size(); ++j) {
        const auto row = table.pred_bits(j);
        for (std::size_t i = 0; i < space.size(); ++i)
            CHECK(((row[i >> 6] >> (i & 63)) & 1u) == (table.allowed(i, j) ? 1u : 0u));
    }
}

TEST_CASE("transfer table memory cap") {
    const StateSpace space = StateSpace::enumerate(5);
    CHECK_THROWS_AS(TransferTable::build(space, 1024), ResourceLimitError);
}

TEST_CASE("every state is reachable within three columns") {
    for (int m = 1; m <= 4; ++m) {
        const StateSpace space = StateSpace::enumerate(m);
        const TransferTable table = TransferTable::build(space);
        std::vector<std::int64_t> cur(space.size(), kInfiniteWeight), next(space.size());
        cur[table.virtual_start()] = 0;
        for (int step = 0; step < 3; ++step) {
            dp_step(space, table, cur, next);
            cur.swap(next);
        }
        for (std::size_t j = 0; j < space.size(); ++j) CHECK(cur[j] != kInfiniteWeight);
    }
}

TEST_CASE("cache round trip") {
    const StateSpace space = StateSpace::enumerate(3);
    const TransferTable table = TransferTable::build(space);
    const auto file = temp_file("g2dm-test-cache.g2dm");
    table.save(file);

    const auto loaded = TransferTable::load(file, space);
    REQUIRE(loaded.has_value());
    CHECK(loaded->order() == table.order());
    CHECK(loaded->rows() == table.rows());
    CHECK(loaded->virtual_start() == table.virtual_start());
    for (std::size_t i = 0; i < table.order(); ++i)
        for (std::size_t j = 0; j < table.order(); ++j)
            CHECK(loaded->allowed(i, j) == table.allowed(i, j));

    // A cache for a different height is rejected.
    const StateSpace other = StateSpace::enumerate(2);
    CHECK_FALSE(TransferTable::load(file, other).has_value());

    // Missing file.
    CHECK_FALSE(TransferTable::load(temp_file("g2dm-no-such-file.g2dm"), space).has_value());

    // Truncation is detected.
    {
        std::ifstream in(file, std::ios::binary);
        std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() - 9));
    }
    CHECK_FALSE(TransferTable::load(file, space).has_value());

    // Bad magic is detected.
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << "BOGUS DATA";
    }
    CHECK_FALSE(TransferTable::load(file, space).has_value());

    // Trailing garbage is detected.
    table.save(file);
    {
        std::ofstream out(file, std::ios::binary | std::ios::app);
        out << "x";
    }
    CHECK_FALSE(TransferTable::load(file, space).has_value());

    std::filesystem::remove(file);
}

TEST_CASE("min-plus matrix from the transfer table") {
    const StateSpace space = StateSpace::enumerate(2);
    const TransferTable table = TransferTable::build(space);
    const MinPlusMatrix mat = as_minplus_matrix(table, space);
    REQUIRE(mat.order == space.size());
    for (std::size_t i = 0; i < mat.order; ++i)
        for (std::size_t j = 0; j < mat.order; ++j) {
            if (table.allowed(i, j))
                CHECK(mat.at(i, j) == space.column_weight(j));
            else
                CHECK(mat.at(i, j) == kInfiniteWeight);
        }

    const StateSpace big = StateSpace::enumerate(5);
    const TransferTable big_table = TransferTable::build(big);
    CHECK_THROWS_AS(as_minplus_matrix(big_table, big, 1024), ResourceLimitError);
    CHECK_THROWS_AS(as_minplus_matrix(table, big), std::invalid_argument);
}

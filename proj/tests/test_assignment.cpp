#include <doctest.h>

#include <numeric>
#include <random>

#include "isodisc/assignment.hpp"
#include "isodisc/isodisc.hpp"
#include "fixtures.hpp"

using namespace isodisc;

namespace {

// Random canonical matrix together with its profile and blocks, for
// exercising the solvers on block-shaped inputs.
struct BlockInstance {
    BinaryMatrix matrix;
    FerrersProfile profile;
    std::vector<CostMatrix> costs;
};

BlockInstance random_block_instance(std::mt19937& rng, int max_dim) {
    BlockInstance inst;
    inst.matrix = canonicalize(fixtures::random_mixed_matrix(rng, max_dim)).matrix;
    inst.profile = ferrers_profile(inst.matrix.row_sums(), inst.matrix.cols);
    for (const auto& block : block_partition(inst.matrix.col_sums()).blocks) {
        std::vector<int> cols(block.size());
        std::iota(cols.begin(), cols.end(), block.begin);
        inst.costs.push_back(build_block_cost_matrix(inst.matrix, inst.profile, cols));
    }
    return inst;
}

}  // namespace

TEST_CASE("block cost matrices for the 3x5 example") {
    BinaryMatrix a = fixtures::example3_a();
    FerrersProfile f = ferrers_profile(a.row_sums(), a.cols);

    SUBCASE("first block: every edge costs 1") {
        std::vector<int> block{0, 1};
        CostMatrix c = build_block_cost_matrix(a, f, block);
        CHECK(c.block_value == 2);
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) CHECK(c.at(p, q) == 1);
    }
    SUBCASE("second block: only the first staircase column discriminates") {
        std::vector<int> block{2, 3, 4};
        CostMatrix c = build_block_cost_matrix(a, f, block);
        CHECK(c.at(0, 0) == 1);  // F_3 vs A_3
        CHECK(c.at(0, 1) == 0);  // F_3 vs A_4
        CHECK(c.at(0, 2) == 1);  // F_3 vs A_5
        for (int q = 0; q < 3; ++q) {
            CHECK(c.at(1, q) == 0);
            CHECK(c.at(2, q) == 0);
        }
    }
    SUBCASE("singleton block") {
        BinaryMatrix m = fixtures::example2_m();
        FerrersProfile fm = ferrers_profile(m.row_sums(), m.cols);
        std::vector<int> block{0};
        CostMatrix c = build_block_cost_matrix(m, fm, block);
        CHECK(c.size == 1);
        CHECK(c.at(0, 0) == column_diff(ferrers_matrix(fm).column(0), m.column(0)));
    }
    SUBCASE("unequal column sums rejected") {
        std::vector<int> bad{0, 2};
        CHECK_THROWS_AS(build_block_cost_matrix(a, f, bad), std::invalid_argument);
    }
    SUBCASE("costs match the explicit staircase column comparison") {
        std::mt19937 rng(41);
        for (int iter = 0; iter < 30; ++iter) {
            BlockInstance inst = random_block_instance(rng, 8);
            BinaryMatrix fm = ferrers_matrix(inst.profile);
            for (const auto& c : inst.costs)
                for (int p = 0; p < c.size; ++p)
                    for (int q = 0; q < c.size; ++q)
                        CHECK(c.at(p, q) == column_diff(fm.column(c.ferrers_cols[p]),
                                                        inst.matrix.column(c.ferrers_cols[q])));
        }
    }
}

TEST_CASE("solve_assignment on the 3x5 example blocks") {
    BinaryMatrix a = fixtures::example3_a();
    FerrersProfile f = ferrers_profile(a.row_sums(), a.cols);

    std::vector<int> b2{2, 3, 4};
    Assignment second = solve_assignment(build_block_cost_matrix(a, f, b2));
    CHECK(second.total_weight == 0);
    CHECK(second.pairing[0] == 1);  // F_3 takes A_4
    CHECK(second.pairing == std::vector<int>{1, 0, 2});

    std::vector<int> b1{0, 1};
    Assignment first = solve_assignment(build_block_cost_matrix(a, f, b1));
    CHECK(first.total_weight == 2);
    CHECK(first.pairing == std::vector<int>{0, 1});
}

TEST_CASE("solve_assignment basics") {
    SUBCASE("singleton") {
        CostMatrix c = fixtures::make_cost_matrix({{7}});
        Assignment a = solve_assignment(c);
        CHECK(a.total_weight == 7);
        CHECK(a.pairing == std::vector<int>{0});
    }
    SUBCASE("empty") {
        CostMatrix c;
        Assignment a = solve_assignment(c);
        CHECK(a.total_weight == 0);
        CHECK(a.pairing.empty());
    }
    SUBCASE("negative costs rejected") {
        CostMatrix c = fixtures::make_cost_matrix({{1, 2}, {-1, 0}});
        CHECK_THROWS_AS(solve_assignment(c), std::invalid_argument);
    }
}

TEST_CASE("solve_assignment equals the exhaustive minimum and its lex-min pairing") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> size_dist(1, 6);
    // Small cost ranges so ties are common and the tie-break is exercised;
    // 0..1 makes almost everything tied.
    for (int max_cost : {1, 3, 20}) {
        std::uniform_int_distribution<int> cost_dist(0, max_cost);
        for (int iter = 0; iter < 150; ++iter) {
            int n = size_dist(rng);
            std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
            for (auto& r : rows)
                for (auto& v : r) v = cost_dist(rng);
            CostMatrix c = fixtures::make_cost_matrix(rows);
            Assignment got = solve_assignment(c);
            fixtures::BruteForceAssignment want = fixtures::brute_force_assignment(c);
            CHECK(got.total_weight == want.total_weight);
            CHECK(got.pairing == want.pairing);
        }
    }
}

TEST_CASE("solve_assignment invariances") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> size_dist(1, 7);
    std::uniform_int_distribution<int> cost_dist(0, 9);
    for (int iter = 0; iter < 100; ++iter) {
        int n = size_dist(rng);
        std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
        for (auto& r : rows)
            for (auto& v : r) v = cost_dist(rng);
        CostMatrix c = fixtures::make_cost_matrix(rows);
        Assignment base = solve_assignment(c);

        // determinism
        CHECK(solve_assignment(c).pairing == base.pairing);

        // adding a constant to one row shifts the weight by that constant
        std::uniform_int_distribution<int> row_dist(0, n - 1);
        int row = row_dist(rng);
        CostMatrix shifted = c;
        for (int q = 0; q < n; ++q) shifted.at(row, q) += 5;
        CHECK(solve_assignment(shifted).total_weight == base.total_weight + 5);

        // zero weight iff some all-zero selection exists
        if (base.total_weight == 0) {
            for (int p = 0; p < n; ++p) CHECK(c.at(p, base.pairing[p]) == 0);
        }
    }
}

TEST_CASE("solve_assignment_reduced matches solve_assignment on block instances") {
    std::mt19937 rng(44);
    for (int iter = 0; iter < 120; ++iter) {
        BlockInstance inst = random_block_instance(rng, 9);
        for (const auto& c : inst.costs) {
            Assignment full = solve_assignment(c);
            Assignment reduced = solve_assignment_reduced(c, inst.profile, inst.matrix.rows);
            CHECK(full.total_weight == reduced.total_weight);
            // the reduced pairing is a valid permutation achieving the weight
            std::vector<char> seen(c.size, 0);
            std::int64_t w = 0;
            for (int p = 0; p < c.size; ++p) {
                REQUIRE(reduced.pairing[p] >= 0);
                REQUIRE(reduced.pairing[p] < c.size);
                CHECK(!seen[reduced.pairing[p]]);
                seen[reduced.pairing[p]] = 1;
                w += c.at(p, reduced.pairing[p]);
            }
            CHECK(w == reduced.total_weight);
            // determinism of the reduced path
            Assignment again = solve_assignment_reduced(c, inst.profile, inst.matrix.rows);
            CHECK(again.pairing == reduced.pairing);
        }
    }
}

TEST_CASE("equal interior staircase columns still carry distinct costs") {
    // Columns 3 and 4 share the column sum and their staircase columns are
    // entry-wise equal (conjugate 3 of 6 rows), yet pairing them costs 0 and
    // 1 respectively; the fast path must sum the diagonal, not multiply the
    // corner cost.
    BinaryMatrix a = BinaryMatrix::from_rows({{1, 1, 1, 1, 1},
                                              {1, 1, 1, 0, 1},
                                              {1, 1, 1, 1, 0},
                                              {1, 1, 0, 0, 0},
                                              {1, 1, 0, 0, 0},
                                              {1, 0, 0, 1, 0}});
    REQUIRE(has_nonincreasing_margins(a));
    FerrersProfile f = ferrers_profile(a.row_sums(), a.cols);
    REQUIRE(f.conjugate[2] == f.conjugate[3]);

    std::vector<int> block{2, 3};
    CostMatrix c = build_block_cost_matrix(a, f, block);
    CHECK(c.at(0, 0) == 0);
    CHECK(c.at(0, 1) == 1);
    CHECK(c.at(1, 0) == 0);
    CHECK(c.at(1, 1) == 1);

    Assignment full = solve_assignment(c);
    Assignment reduced = solve_assignment_reduced(c, f, a.rows);
    CHECK(full.total_weight == 1);
    CHECK(reduced.total_weight == 1);
    CHECK(reduced.pairing == std::vector<int>{0, 1});
}

TEST_CASE("reduced fast paths on the 3x5 example") {
    BinaryMatrix a = fixtures::example3_a();
    FerrersProfile f = ferrers_profile(a.row_sums(), a.cols);

    SUBCASE("claw block: reduced picks the zero-cost edge") {
        std::vector<int> block{2, 3, 4};
        Assignment r = solve_assignment_reduced(build_block_cost_matrix(a, f, block), f, 3);
        CHECK(r.total_weight == 0);
        CHECK(r.pairing[0] == 1);  // F_3 takes A_4
    }
    SUBCASE("all-ones staircase columns: constant-column fast path") {
        std::vector<int> block{0, 1};
        Assignment r = solve_assignment_reduced(build_block_cost_matrix(a, f, block), f, 3);
        CHECK(r.total_weight == 2);
        CHECK(r.pairing == std::vector<int>{0, 1});
    }
}

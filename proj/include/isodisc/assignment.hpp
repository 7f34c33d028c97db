#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isodisc/ferrers.hpp"
#include "isodisc/matrix.hpp"

namespace isodisc {

// Square cost matrix of one equal-column-sum block: costs[p][q] is the
// positive difference between staircase column ferrers_cols[p] and matrix
// column ferrers_cols[q].
struct CostMatrix {
    int size = 0;
    std::vector<std::int64_t> costs;  // size * size, row-major
    std::vector<int> ferrers_cols;    // canonical column indices of the block
    int block_value = 0;              // the common column sum

    std::int64_t at(int p, int q) const {
        return costs[static_cast<std::size_t>(p) * size + q];
    }
    std::int64_t& at(int p, int q) {
        return costs[static_cast<std::size_t>(p) * size + q];
    }
};

// pairing[p] = q pairs staircase-column position p with matrix-column
// position q; total_weight is the (minimum) sum of the chosen costs.
struct Assignment {
    std::vector<int> pairing;
    std::int64_t total_weight = 0;
};

// block must be a run of columns of equal column sum in a matrix with
// non-increasing margins.
CostMatrix build_block_cost_matrix(const BinaryMatrix& a, const FerrersProfile& f,
                                   std::span<const int> block);

// Exact minimum-weight perfect matching, O(size^3). Among all minimum-weight
// pairings returns the lexicographically smallest one.
Assignment solve_assignment(const CostMatrix& c);

// Same total weight as solve_assignment, computed through two shortcuts:
// blocks whose staircase columns are all equal need no solve at all, and
// staircase columns that are all-zero or all-one have constant cost rows and
// are taken out before solving; the leftover matrix columns are then paired
// with those positions in ascending order. The reported pairing may differ
// from solve_assignment's (it is still deterministic); the weight never does.
Assignment solve_assignment_reduced(const CostMatrix& c, const FerrersProfile& f, int m);

}  // namespace isodisc

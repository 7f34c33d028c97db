#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "isodisc/matrix.hpp"

namespace isodisc {

struct OracleBudget {
    std::int64_t max_total_permutations = 1'000'000;
    std::int64_t max_block_factorial = 1'000'000;
};

struct BudgetExceededError : std::runtime_error {
    BudgetExceededError(std::int64_t required, std::int64_t budget)
        : std::runtime_error("oracle budget exceeded: needs " + std::to_string(required) +
                             " permutations, budget is " + std::to_string(budget)),
          required(required) {}
    std::int64_t required;  // saturates at int64 max / 4 on overflow
};

// Counts shifts while actually performing them: walks columns right to left,
// and for every position where the staircase matrix has a 1 and the working
// copy a 0, moves a surplus 1 of the same row in from the right. Ends with
// the staircase matrix exactly; the tally is an independent check of disc.
// Requires non-increasing row and column sums.
std::int64_t shift_simulation_disc(const BinaryMatrix& a);

// Exhaustive minimum of disc over all products of per-block column
// permutations. Canonicalizes internally. Throws BudgetExceededError when
// the permutation count is over budget.
std::int64_t brute_force_id(const BinaryMatrix& a, const OracleBudget& budget = {});

}  // namespace isodisc

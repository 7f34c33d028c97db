#include "isodisc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "isodisc/ferrers.hpp"
#include "isodisc/isodisc.hpp"

namespace isodisc {

std::int64_t shift_simulation_disc(const BinaryMatrix& a) {
    if (!has_nonincreasing_margins(a))
        throw std::invalid_argument(
            "shift_simulation_disc: requires non-increasing row and column sums");
    BinaryMatrix work = a;
    BinaryMatrix target = ferrers_matrix(ferrers_profile(a.row_sums(), a.cols));
    std::int64_t shifts = 0;
    for (int j = a.cols - 1; j >= 0; --j) {
        for (int i = 0; i < a.rows; ++i) {
            if (!(target.at(i, j) == 1 && work.at(i, j) == 0)) continue;
            // Row sums are preserved by every shift, so the missing 1 must
            // sit to the right in a position the staircase does not use.
            int src = -1;
            for (int k = j + 1; k < a.cols; ++k) {
                if (work.at(i, k) == 1 && target.at(i, k) == 0) {
                    src = k;
                    break;
                }
            }
            if (src == -1)
                throw std::logic_error("shift_simulation_disc: no surplus 1 to shift");
            work.at(i, j) = 1;
            work.at(i, src) = 0;
            ++shifts;
        }
    }
    if (!(work == target))
        throw std::logic_error("shift_simulation_disc: simulation did not reach the staircase");
    return shifts;
}

namespace {

constexpr std::int64_t kBudgetCap = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t factorial_saturating(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > kBudgetCap / i) return kBudgetCap;
        f *= i;
    }
    return f;
}

}  // namespace

std::int64_t brute_force_id(const BinaryMatrix& a, const OracleBudget& budget) {
    CanonicalForm cf = canonicalize(a);
    const BinaryMatrix& m = cf.matrix;
    if (m.rows == 0 || m.cols == 0) return 0;

    BlockPartition bp = block_partition(m.col_sums());
    std::int64_t total_perms = 1;
    for (const auto& block : bp.blocks) {
        std::int64_t f = factorial_saturating(block.size());
        if (f > budget.max_block_factorial)
            throw BudgetExceededError(f, budget.max_block_factorial);
        if (total_perms > kBudgetCap / f)
            total_perms = kBudgetCap;
        else
            total_perms *= f;
    }
    if (total_perms > budget.max_total_permutations)
        throw BudgetExceededError(total_perms, budget.max_total_permutations);

    const std::int64_t bound = lower_bound(m);

    // Odometer over per-block permutations, each block in lexicographic
    // order via next_permutation.
    std::vector<std::vector<int>> block_perms;
    for (const auto& block : bp.blocks) {
        std::vector<int> p(block.size());
        std::iota(p.begin(), p.end(), block.begin);
        block_perms.push_back(std::move(p));
    }

    std::vector<int> sigma(m.cols);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    while (true) {
        for (std::size_t b = 0; b < block_perms.size(); ++b)
            std::copy(block_perms[b].begin(), block_perms[b].end(),
                      sigma.begin() + bp.blocks[b].begin);
        best = std::min(best, disc(apply_col_permutation(m, sigma)));
        if (best == bound) break;  // cannot go lower
        std::size_t b = 0;
        for (; b < block_perms.size(); ++b) {
            if (std::next_permutation(block_perms[b].begin(), block_perms[b].end())) break;
            // wrapped to sorted order, carry to the next block
        }
        if (b == block_perms.size()) break;
    }
    return best;
}

}  // namespace isodisc

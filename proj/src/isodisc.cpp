#include "isodisc/isodisc.hpp"

#include <numeric>
#include <stdexcept>

namespace isodisc {

BlockPartition block_partition(std::span<const int> col_sums) {
    BlockPartition bp;
    const int n = static_cast<int>(col_sums.size());
    int begin = 0;
    for (int j = 1; j <= n; ++j) {
        if (j < n && col_sums[j] > col_sums[j - 1])
            throw std::invalid_argument("block_partition: column sums must be non-increasing");
        if (j == n || col_sums[j] != col_sums[begin]) {
            bp.blocks.push_back({col_sums[begin], begin, j});
            begin = j;
        }
    }
    return bp;
}

BinaryMatrix DiscrepancyReport::witness() const {
    return apply_col_permutation(canonical.matrix, sigma);
}

DiscrepancyReport isomorphic_discrepancy(const BinaryMatrix& a) {
    DiscrepancyReport rep;
    rep.canonical = canonicalize(a);
    const BinaryMatrix& m = rep.canonical.matrix;

    rep.sigma.resize(m.cols);
    std::iota(rep.sigma.begin(), rep.sigma.end(), 0);

    if (m.rows == 0 || m.cols == 0) {
        rep.sigma_original = rep.canonical.col_perm;
        return rep;
    }

    rep.disc = disc(m);
    rep.lower_bound = lower_bound(m);

    FerrersProfile profile = ferrers_profile(m.row_sums(), m.cols);
    BlockPartition bp = block_partition(m.col_sums());

    for (const auto& block : bp.blocks) {
        std::vector<int> cols(block.size());
        std::iota(cols.begin(), cols.end(), block.begin);
        CostMatrix cost = build_block_cost_matrix(m, profile, cols);
        Assignment asg = solve_assignment_reduced(cost, profile, m.rows);

        DiscrepancyReport::BlockReport br;
        br.value = block.value;
        br.size = block.size();
        br.weight = asg.total_weight;
        br.forced_constant.resize(block.size());
        for (int p = 0; p < block.size(); ++p) {
            int conj = profile.conjugate[cols[p]];
            br.forced_constant[p] = (conj == 0 || conj == m.rows) ? 1 : 0;
        }
        rep.per_block.push_back(std::move(br));

        rep.id += asg.total_weight;
        for (int p = 0; p < block.size(); ++p)
            rep.sigma[block.begin + p] = block.begin + asg.pairing[p];
    }

    rep.sigma_original.resize(m.cols);
    for (int j = 0; j < m.cols; ++j)
        rep.sigma_original[j] = rep.canonical.col_perm[rep.sigma[j]];
    return rep;
}

DiscrepancyReport general_isomorphic_discrepancy(const BinaryMatrix& a) {
    DiscrepancyReport rep = isomorphic_discrepancy(a);
    DiscrepancyReport rep_t = isomorphic_discrepancy(transpose(a));

    DiscrepancyReport::General g;
    g.id_transposed = rep_t.id;
    g.min = std::min(rep.id, rep_t.id);
    std::int64_t sum = rep.id + rep_t.id;
    if (sum % 2 == 0) {
        g.mean_num = sum / 2;
        g.mean_den = 1;
    } else {
        g.mean_num = sum;
        g.mean_den = 2;
    }
    rep.general = g;
    return rep;
}

}  // namespace isodisc

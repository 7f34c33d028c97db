#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isodisc/assignment.hpp"
#include "isodisc/ferrers.hpp"
#include "isodisc/matrix.hpp"

namespace isodisc {

// Maximal runs of equal values in a non-increasing column-sum sequence.
struct BlockPartition {
    struct Block {
        int value;  // the common column sum
        int begin;  // first column index (inclusive)
        int end;    // last column index (exclusive)

        int size() const { return end - begin; }
    };
    std::vector<Block> blocks;

    int count() const { return static_cast<int>(blocks.size()); }
};

BlockPartition block_partition(std::span<const int> col_sums);

// Everything the isomorphic-discrepancy computation produces. sigma uses the
// same convention as apply_col_permutation: canonical destination j holds
// canonical column sigma[j]; sigma_original[j] is that source column's
// original index.
struct DiscrepancyReport {
    std::int64_t disc = 0;
    std::int64_t id = 0;
    std::int64_t lower_bound = 0;
    std::vector<int> sigma;
    std::vector<int> sigma_original;

    struct BlockReport {
        int value = 0;
        int size = 0;
        std::int64_t weight = 0;
        // Per staircase-column position: true when the column is all-zero or
        // all-one, making every pairing of it equally cheap.
        std::vector<std::uint8_t> forced_constant;
    };
    std::vector<BlockReport> per_block;

    CanonicalForm canonical;

    struct General {
        std::int64_t id_transposed = 0;
        std::int64_t min = 0;
        // Exact mean of the two values: mean_num / mean_den with den 1 or 2.
        std::int64_t mean_num = 0;
        int mean_den = 1;
    };
    std::optional<General> general;

    // The witness matrix: canonical matrix with sigma applied, whose plain
    // discrepancy equals id.
    BinaryMatrix witness() const;
};

// Minimum discrepancy over all column relabelings within equal-sum groups
// (row relabelings cannot change it). Canonicalizes internally; accepts any
// labeling.
DiscrepancyReport isomorphic_discrepancy(const BinaryMatrix& a);

// Additionally computes the value for the transpose and fills `general`
// with (transposed value, min, exact mean).
DiscrepancyReport general_isomorphic_discrepancy(const BinaryMatrix& a);

}  // namespace isodisc

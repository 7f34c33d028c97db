#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isodisc/matrix.hpp"

namespace isodisc {

// Row sums together with their conjugate sequence. conjugate[j] (0-based j,
// for 1-based column j+1) counts the rows with sum >= j+1; these are the
// column sums of the staircase matrix F whose row i is row_sums[i] ones
// followed by zeros.
struct FerrersProfile {
    std::vector<int> row_sums;   // non-increasing
    std::vector<int> conjugate;  // length = cols, non-increasing

    int rows() const { return static_cast<int>(row_sums.size()); }
    int cols() const { return static_cast<int>(conjugate.size()); }
};

// Requires every value in [0, n] and row_sums non-increasing.
FerrersProfile ferrers_profile(std::span<const int> row_sums, int n);

// The staircase matrix implied by the profile (unlabeled).
BinaryMatrix ferrers_matrix(const FerrersProfile& f);

// Sum of positive entrywise differences of two 0/1 columns, i.e. the number
// of positions where v is 1 and u is 0.
std::int64_t column_diff(std::span<const std::uint8_t> v, std::span<const std::uint8_t> u);

// Column-major copy of a matrix; col(j) is contiguous so the counting
// kernels can run on it.
struct ColumnStore {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> data;  // cols * rows, column-major

    std::span<const std::uint8_t> col(int j) const {
        return {data.data() + static_cast<std::size_t>(j) * rows,
                static_cast<std::size_t>(rows)};
    }
};

ColumnStore column_store(const BinaryMatrix& a);

// Minimum number of left-shifts of ones that turn the matrix into its
// staircase form; requires non-increasing row and column sums.
std::int64_t disc(const BinaryMatrix& a);

// Sum over columns of (conjugate - column sum)^+ : the smallest discrepancy
// any matrix with these margins can have. Requires canonical margins.
std::int64_t lower_bound(const BinaryMatrix& a);

}  // namespace isodisc

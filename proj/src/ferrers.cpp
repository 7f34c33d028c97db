#include "isodisc/ferrers.hpp"

#include <algorithm>
#include <stdexcept>

#include "isodisc/kernels.hpp"

namespace isodisc {

FerrersProfile ferrers_profile(std::span<const int> row_sums, int n) {
    FerrersProfile f;
    f.row_sums.assign(row_sums.begin(), row_sums.end());
    for (std::size_t i = 0; i < f.row_sums.size(); ++i) {
        int r = f.row_sums[i];
        if (r < 0 || r > n)
            throw std::invalid_argument("ferrers_profile: row sum " + std::to_string(r) +
                                        " out of range [0, " + std::to_string(n) + "]");
        if (i > 0 && f.row_sums[i - 1] < r)
            throw std::invalid_argument("ferrers_profile: row sums must be non-increasing");
    }
    f.conjugate.assign(n, 0);
    for (int r : f.row_sums)
        for (int j = 0; j < r; ++j) ++f.conjugate[j];
    return f;
}

BinaryMatrix ferrers_matrix(const FerrersProfile& f) {
    BinaryMatrix m = BinaryMatrix::zeros(f.rows(), f.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.row_sums[i]; ++j) m.at(i, j) = 1;
    return m;
}

std::int64_t column_diff(std::span<const std::uint8_t> v, std::span<const std::uint8_t> u) {
    if (v.size() != u.size())
        throw std::invalid_argument("column_diff: length mismatch");
    return static_cast<std::int64_t>(kernels::count_andnot(v.data(), u.data(), v.size()));
}

ColumnStore column_store(const BinaryMatrix& a) {
    ColumnStore cs;
    cs.rows = a.rows;
    cs.cols = a.cols;
    cs.data.resize(static_cast<std::size_t>(a.rows) * a.cols);
    for (int i = 0; i < a.rows; ++i) {
        const std::uint8_t* r = a.entries.data() + static_cast<std::size_t>(i) * a.cols;
        for (int j = 0; j < a.cols; ++j)
            cs.data[static_cast<std::size_t>(j) * a.rows + i] = r[j];
    }
    return cs;
}

namespace {

void require_canonical(const BinaryMatrix& a, const char* op) {
    if (!has_nonincreasing_margins(a))
        throw std::invalid_argument(std::string(op) +
                                    ": requires non-increasing row and column sums");
}

}  // namespace

std::int64_t disc(const BinaryMatrix& a) {
    require_canonical(a, "disc");
    FerrersProfile f = ferrers_profile(a.row_sums(), a.cols);
    ColumnStore cs = column_store(a);
    std::int64_t total = 0;
    // With rows sorted, column j of F is conjugate[j] ones on top; its
    // positive difference against column j of A is the number of zeros of A
    // in that prefix.
    for (int j = 0; j < a.cols; ++j) {
        int prefix = f.conjugate[j];
        auto col = cs.col(j);
        total += prefix - static_cast<std::int64_t>(
                              kernels::count_ones(col.data(), static_cast<std::size_t>(prefix)));
    }
    return total;
}

std::int64_t lower_bound(const BinaryMatrix& a) {
    require_canonical(a, "lower_bound");
    FerrersProfile f = ferrers_profile(a.row_sums(), a.cols);
    std::vector<int> cs = a.col_sums();
    std::int64_t total = 0;
    for (int j = 0; j < a.cols; ++j) total += std::max(0, f.conjugate[j] - cs[j]);
    return total;
}

}  // namespace isodisc

#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isodisc {

// Input could not be read as the requested format (syntax level).
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// Input parsed but does not describe a valid matrix (ragged rows, duplicate
// labels, edges to undeclared vertices).
struct InvalidMatrixError : std::runtime_error {
    InvalidMatrixError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line(line) {}
    int line;
};

// Dense m x n 0/1 matrix, row-major, with optional row/column labels.
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries;  // rows * cols, values 0 or 1
    std::optional<std::vector<std::string>> row_labels;
    std::optional<std::vector<std::string>> col_labels;

    static BinaryMatrix zeros(int m, int n);
    // Convenience for literals in tests and tools.
    static BinaryMatrix from_rows(std::initializer_list<std::initializer_list<int>> data);

    std::uint8_t at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
    std::uint8_t& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
    std::span<const std::uint8_t> row(int i) const {
        return {entries.data() + static_cast<std::size_t>(i) * cols,
                static_cast<std::size_t>(cols)};
    }

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    std::vector<std::uint8_t> column(int j) const;

    bool operator==(const BinaryMatrix&) const = default;
};

struct Margins {
    std::vector<int> row_sums;
    std::vector<int> col_sums;
};

Margins margins(const BinaryMatrix& a);

// A copy of the matrix with non-increasing row and column sums, together with
// the permutations taking canonical indices back to original ones:
// original(row_perm[i], col_perm[j]) == canonical(i, j). Sorting is stable,
// so equal sums keep their original order.
struct CanonicalForm {
    BinaryMatrix matrix;
    std::vector<int> row_perm;  // canonical row index -> original row index
    std::vector<int> col_perm;  // canonical col index -> original col index

    bool is_identity() const;
};

CanonicalForm canonicalize(const BinaryMatrix& a);

BinaryMatrix transpose(const BinaryMatrix& a);

// Column j of the result is column sigma[j] of the input ("destination j
// holds source sigma[j]"). Labels move with their columns. This is the one
// permutation convention used everywhere a witness permutation is reported.
BinaryMatrix apply_col_permutation(const BinaryMatrix& a, std::span<const int> sigma);

bool has_nonincreasing_margins(const BinaryMatrix& a);

enum class Format { dense, csv, edgelist };

// dense:    one row per line, '0'/'1' characters, optional spaces between
//           them; blank lines ignored; no labels.
// csv:      header ",collabel,..." then "rowlabel,cell,..." lines.
// edgelist: "rows: a b c" and "cols: x y z" headers declaring the full
//           vertex sets, then one "rowlabel collabel" line per edge.
BinaryMatrix parse_matrix(std::istream& in, Format format);
BinaryMatrix parse_matrix(const std::string& text, Format format);

void write_dense(std::ostream& out, const BinaryMatrix& a);

}  // namespace isodisc

#include "isodisc/matrix.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "isodisc/kernels.hpp"

namespace isodisc {

BinaryMatrix BinaryMatrix::zeros(int m, int n) {
    BinaryMatrix a;
    a.rows = m;
    a.cols = n;
    a.entries.assign(static_cast<std::size_t>(m) * n, 0);
    return a;
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::initializer_list<int>> data) {
    BinaryMatrix a;
    a.rows = static_cast<int>(data.size());
    a.cols = a.rows == 0 ? 0 : static_cast<int>(data.begin()->size());
    a.entries.reserve(static_cast<std::size_t>(a.rows) * a.cols);
    for (const auto& r : data) {
        if (static_cast<int>(r.size()) != a.cols)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int v : r) {
            if (v != 0 && v != 1) throw std::invalid_argument("from_rows: entries must be 0 or 1");
            a.entries.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return a;
}

std::vector<int> BinaryMatrix::row_sums() const {
    std::vector<int> sums(rows);
    for (int i = 0; i < rows; ++i) {
        auto r = row(i);
        sums[i] = static_cast<int>(kernels::count_ones(r.data(), r.size()));
    }
    return sums;
}

std::vector<int> BinaryMatrix::col_sums() const {
    std::vector<int> sums(cols, 0);
    for (int i = 0; i < rows; ++i) {
        const std::uint8_t* r = entries.data() + static_cast<std::size_t>(i) * cols;
        for (int j = 0; j < cols; ++j) sums[j] += r[j];
    }
    return sums;
}

std::vector<std::uint8_t> BinaryMatrix::column(int j) const {
    std::vector<std::uint8_t> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

Margins margins(const BinaryMatrix& a) { return {a.row_sums(), a.col_sums()}; }

bool CanonicalForm::is_identity() const {
    for (int i = 0; i < static_cast<int>(row_perm.size()); ++i)
        if (row_perm[i] != i) return false;
    for (int j = 0; j < static_cast<int>(col_perm.size()); ++j)
        if (col_perm[j] != j) return false;
    return true;
}

namespace {

std::vector<int> sorted_order(const std::vector<int>& sums) {
    std::vector<int> order(sums.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sums[a] > sums[b]; });
    return order;
}

}  // namespace

CanonicalForm canonicalize(const BinaryMatrix& a) {
    CanonicalForm cf;
    cf.row_perm = sorted_order(a.row_sums());
    cf.col_perm = sorted_order(a.col_sums());
    cf.matrix.rows = a.rows;
    cf.matrix.cols = a.cols;
    cf.matrix.entries.resize(a.entries.size());
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            cf.matrix.at(i, j) = a.at(cf.row_perm[i], cf.col_perm[j]);
    if (a.row_labels) {
        std::vector<std::string> labels(a.rows);
        for (int i = 0; i < a.rows; ++i) labels[i] = (*a.row_labels)[cf.row_perm[i]];
        cf.matrix.row_labels = std::move(labels);
    }
    if (a.col_labels) {
        std::vector<std::string> labels(a.cols);
        for (int j = 0; j < a.cols; ++j) labels[j] = (*a.col_labels)[cf.col_perm[j]];
        cf.matrix.col_labels = std::move(labels);
    }
    return cf;
}

BinaryMatrix transpose(const BinaryMatrix& a) {
    BinaryMatrix t = BinaryMatrix::zeros(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    t.row_labels = a.col_labels;
    t.col_labels = a.row_labels;
    return t;
}

BinaryMatrix apply_col_permutation(const BinaryMatrix& a, std::span<const int> sigma) {
    if (static_cast<int>(sigma.size()) != a.cols)
        throw std::invalid_argument("apply_col_permutation: permutation size mismatch");
    std::vector<char> seen(a.cols, 0);
    for (int s : sigma) {
        if (s < 0 || s >= a.cols || seen[s])
            throw std::invalid_argument("apply_col_permutation: not a bijection");
        seen[s] = 1;
    }
    BinaryMatrix out = BinaryMatrix::zeros(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, sigma[j]);
    out.row_labels = a.row_labels;
    if (a.col_labels) {
        std::vector<std::string> labels(a.cols);
        for (int j = 0; j < a.cols; ++j) labels[j] = (*a.col_labels)[sigma[j]];
        out.col_labels = std::move(labels);
    }
    return out;
}

bool has_nonincreasing_margins(const BinaryMatrix& a) {
    auto nonincreasing = [](const std::vector<int>& v) {
        return std::is_sorted(v.begin(), v.end(), std::greater<int>());
    };
    return nonincreasing(a.row_sums()) && nonincreasing(a.col_sums());
}

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

BinaryMatrix parse_dense(std::istream& in) {
    BinaryMatrix a;
    std::string line;
    int line_no = 0;
    int width = -1;
    std::vector<std::uint8_t> entries;
    int rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (is_blank(line)) continue;
        int count = 0;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch != '0' && ch != '1')
                throw ParseError(line_no, std::string("invalid character '") + ch +
                                              "' in dense row");
            entries.push_back(static_cast<std::uint8_t>(ch - '0'));
            ++count;
        }
        if (width < 0)
            width = count;
        else if (count != width)
            throw InvalidMatrixError(line_no, "inconsistent row length: expected " +
                                                  std::to_string(width) + " entries, got " +
                                                  std::to_string(count));
        ++rows;
    }
    a.rows = rows;
    a.cols = width < 0 ? 0 : width;
    a.entries = std::move(entries);
    return a;
}

BinaryMatrix parse_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::vector<std::string> col_labels;
    std::vector<std::string> row_labels;
    std::vector<std::uint8_t> entries;
    std::unordered_set<std::string> seen_rows;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (is_blank(line)) continue;
        auto cells = split(line, ',');
        if (!have_header) {
            if (!trim(cells[0]).empty())
                throw ParseError(line_no, "csv header must start with an empty cell");
            std::unordered_set<std::string> seen;
            for (std::size_t k = 1; k < cells.size(); ++k) {
                std::string label = trim(cells[k]);
                if (label.empty()) throw ParseError(line_no, "empty column label");
                if (!seen.insert(label).second)
                    throw InvalidMatrixError(line_no, "duplicate column label '" + label + "'");
                col_labels.push_back(std::move(label));
            }
            have_header = true;
            continue;
        }
        std::string rlabel = trim(cells[0]);
        if (rlabel.empty()) throw ParseError(line_no, "empty row label");
        if (!seen_rows.insert(rlabel).second)
            throw InvalidMatrixError(line_no, "duplicate row label '" + rlabel + "'");
        if (cells.size() - 1 != col_labels.size())
            throw InvalidMatrixError(line_no, "inconsistent row length: expected " +
                                                  std::to_string(col_labels.size()) +
                                                  " cells, got " +
                                                  std::to_string(cells.size() - 1));
        for (std::size_t k = 1; k < cells.size(); ++k) {
            std::string cell = trim(cells[k]);
            if (cell != "0" && cell != "1")
                throw ParseError(line_no, "cell must be 0 or 1, got '" + cell + "'");
            entries.push_back(static_cast<std::uint8_t>(cell == "1"));
        }
        row_labels.push_back(std::move(rlabel));
    }
    BinaryMatrix a;
    a.rows = static_cast<int>(row_labels.size());
    a.cols = static_cast<int>(col_labels.size());
    a.entries = std::move(entries);
    if (have_header) {
        a.row_labels = std::move(row_labels);
        a.col_labels = std::move(col_labels);
    }
    return a;
}

BinaryMatrix parse_edgelist(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::string> row_labels, col_labels;
    std::unordered_map<std::string, int> row_index, col_index;
    bool have_rows = false, have_cols = false;
    BinaryMatrix a;

    auto parse_header = [&](const std::string& body, int lno,
                            std::vector<std::string>& labels,
                            std::unordered_map<std::string, int>& index, const char* what) {
        for (const auto& label : split_ws(body)) {
            if (!index.emplace(label, static_cast<int>(labels.size())).second)
                throw InvalidMatrixError(lno, std::string("duplicate ") + what + " label '" +
                                                  label + "'");
            labels.push_back(label);
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (is_blank(line)) continue;
        if (!have_rows) {
            if (line.rfind("rows:", 0) != 0)
                throw ParseError(line_no, "expected 'rows:' header");
            parse_header(line.substr(5), line_no, row_labels, row_index, "row");
            have_rows = true;
            continue;
        }
        if (!have_cols) {
            if (line.rfind("cols:", 0) != 0)
                throw ParseError(line_no, "expected 'cols:' header");
            parse_header(line.substr(5), line_no, col_labels, col_index, "column");
            have_cols = true;
            a = BinaryMatrix::zeros(static_cast<int>(row_labels.size()),
                                    static_cast<int>(col_labels.size()));
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() != 2)
            throw ParseError(line_no, "expected 'rowlabel collabel' pair");
        auto r = row_index.find(toks[0]);
        if (r == row_index.end())
            throw InvalidMatrixError(line_no, "unknown row label '" + toks[0] + "'");
        auto c = col_index.find(toks[1]);
        if (c == col_index.end())
            throw InvalidMatrixError(line_no, "unknown column label '" + toks[1] + "'");
        a.at(r->second, c->second) = 1;
    }
    if (!have_rows) return BinaryMatrix{};  // empty input: 0 x 0
    if (!have_cols) throw ParseError(line_no + 1, "expected 'cols:' header");
    a.row_labels = std::move(row_labels);
    a.col_labels = std::move(col_labels);
    return a;
}

}  // namespace

BinaryMatrix parse_matrix(std::istream& in, Format format) {
    switch (format) {
        case Format::dense: return parse_dense(in);
        case Format::csv: return parse_csv(in);
        case Format::edgelist: return parse_edgelist(in);
    }
    throw std::invalid_argument("unknown format");
}

BinaryMatrix parse_matrix(const std::string& text, Format format) {
    std::istringstream iss(text);
    return parse_matrix(iss, format);
}

void write_dense(std::ostream& out, const BinaryMatrix& a) {
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) out.put(static_cast<char>('0' + a.at(i, j)));
        out.put('\n');
    }
}

}  // namespace isodisc

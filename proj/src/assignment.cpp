#include "isodisc/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "isodisc/kernels.hpp"

namespace isodisc {

CostMatrix build_block_cost_matrix(const BinaryMatrix& a, const FerrersProfile& f,
                                   std::span<const int> block) {
    CostMatrix c;
    c.size = static_cast<int>(block.size());
    c.ferrers_cols.assign(block.begin(), block.end());
    if (c.size == 0) return c;

    std::vector<int> row_sums = a.row_sums();
    if (!std::is_sorted(row_sums.begin(), row_sums.end(), std::greater<int>()))
        throw std::invalid_argument("build_block_cost_matrix: rows must be sorted by sum");

    std::vector<int> col_sums = a.col_sums();
    c.block_value = col_sums[block[0]];
    for (int j : block) {
        if (j < 0 || j >= a.cols)
            throw std::invalid_argument("build_block_cost_matrix: column index out of range");
        if (col_sums[j] != c.block_value)
            throw std::invalid_argument("build_block_cost_matrix: block columns not of equal sum");
    }

    // Contiguous copies of the block's matrix columns.
    std::vector<std::uint8_t> cols(static_cast<std::size_t>(c.size) * a.rows);
    for (int q = 0; q < c.size; ++q)
        for (int i = 0; i < a.rows; ++i)
            cols[static_cast<std::size_t>(q) * a.rows + i] = a.at(i, block[q]);

    // Staircase column j is conjugate[j] ones on top, so its positive
    // difference against a matrix column is the number of zeros in that
    // prefix of the column.
    c.costs.resize(static_cast<std::size_t>(c.size) * c.size);
    for (int p = 0; p < c.size; ++p) {
        int prefix = f.conjugate[block[p]];
        for (int q = 0; q < c.size; ++q) {
            const std::uint8_t* col = cols.data() + static_cast<std::size_t>(q) * a.rows;
            c.at(p, q) = prefix - static_cast<std::int64_t>(kernels::count_ones(
                                      col, static_cast<std::size_t>(prefix)));
        }
    }
    return c;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Shortest-augmenting-path assignment with potentials. On return the duals
// satisfy cost[p][q] >= u[p] + v[q] with equality on matched edges, which
// certifies optimality and is what the tie-break refinement below relies on.
struct JvResult {
    std::vector<int> row_to_col;
    std::vector<std::int64_t> u, v;  // size n+1 each, 1-based
};

JvResult jv_solve(const CostMatrix& c) {
    const int n = c.size;
    JvResult r;
    r.u.assign(n + 1, 0);
    r.v.assign(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            std::int64_t delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = c.at(i0 - 1, j - 1) - r.u[i0] - r.v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    r.u[p[j]] += delta;
                    r.v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    r.row_to_col.assign(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j]) r.row_to_col[p[j] - 1] = j - 1;
    return r;
}

// Every minimum-weight pairing uses only tight edges (cost == u + v), and
// every perfect matching on tight edges is minimum-weight. The
// lexicographically smallest optimum is therefore found greedily: for each
// row in order take the smallest tight column that still leaves the rest of
// the tight graph perfectly matchable. That feasibility question is answered
// with strongly connected components of the alternating digraph (unmatched
// tight edges row->col, matched edges col->row): an edge lies in some perfect
// matching iff it is matched or connects vertices in one component.
class LexRefiner {
  public:
    LexRefiner(const CostMatrix& c, const JvResult& jv)
        : c_(c), n_(c.size), match_(jv.row_to_col), u_(jv.u), v_(jv.v),
          col_to_row_(n_), fixed_row_(n_, 0), fixed_col_(n_, 0),
          scc_(2 * n_), index_(2 * n_), low_(2 * n_), on_stack_(2 * n_) {
        for (int p = 0; p < n_; ++p) col_to_row_[match_[p]] = p;
    }

    std::vector<int> run() {
        for (int p = 0; p < n_; ++p) {
            compute_scc();
            int best = match_[p];
            for (int q = 0; q < best; ++q) {
                if (fixed_col_[q] || !tight(p, q)) continue;
                if (scc_[p] == scc_[n_ + q]) {
                    best = q;
                    break;
                }
            }
            if (best != match_[p]) rotate(p, best);
            fixed_row_[p] = 1;
            fixed_col_[best] = 1;
        }
        return match_;
    }

  private:
    bool tight(int p, int q) const { return c_.at(p, q) == u_[p + 1] + v_[q + 1]; }

    // Iterative Tarjan over rows 0..n-1 and columns n..2n-1 (unfixed only).
    void compute_scc() {
        std::fill(index_.begin(), index_.end(), -1);
        std::fill(on_stack_.begin(), on_stack_.end(), 0);
        next_index_ = 0;
        scc_count_ = 0;
        stack_.clear();
        for (int s = 0; s < 2 * n_; ++s) {
            if (index_[s] != -1 || is_fixed(s)) continue;
            strongconnect(s);
        }
    }

    bool is_fixed(int node) const {
        return node < n_ ? fixed_row_[node] != 0 : fixed_col_[node - n_] != 0;
    }

    // Successors: a row points to every unfixed column it has an unmatched
    // tight edge to; a column points to the row it is matched with.
    template <typename Fn>
    void for_each_succ(int node, Fn&& fn) const {
        if (node < n_) {
            int p = node;
            for (int q = 0; q < n_; ++q) {
                if (fixed_col_[q] || match_[p] == q) continue;
                if (tight(p, q)) fn(n_ + q);
            }
        } else {
            int p = col_to_row_[node - n_];
            if (!fixed_row_[p]) fn(p);
        }
    }

    struct Frame {
        int node;
        int next_succ;  // for rows: next column to try; for cols: 0 or 1
    };

    void strongconnect(int root) {
        std::vector<Frame> call;
        call.push_back({root, 0});
        index_[root] = low_[root] = next_index_++;
        stack_.push_back(root);
        on_stack_[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            int child = next_child(f);
            if (child != -1) {
                if (index_[child] == -1) {
                    index_[child] = low_[child] = next_index_++;
                    stack_.push_back(child);
                    on_stack_[child] = 1;
                    call.push_back({child, 0});
                } else if (on_stack_[child]) {
                    low_[f.node] = std::min(low_[f.node], index_[child]);
                }
                continue;
            }
            if (low_[f.node] == index_[f.node]) {
                while (true) {
                    int w = stack_.back();
                    stack_.pop_back();
                    on_stack_[w] = 0;
                    scc_[w] = scc_count_;
                    if (w == f.node) break;
                }
                ++scc_count_;
            }
            int done = f.node;
            call.pop_back();
            if (!call.empty())
                low_[call.back().node] = std::min(low_[call.back().node], low_[done]);
        }
    }

    // Enumerates successors of f.node starting at f.next_succ; -1 when done.
    int next_child(Frame& f) const {
        if (f.node < n_) {
            int p = f.node;
            for (int q = f.next_succ; q < n_; ++q) {
                if (fixed_col_[q] || match_[p] == q || !tight(p, q)) continue;
                f.next_succ = q + 1;
                return n_ + q;
            }
            f.next_succ = n_;
            return -1;
        }
        if (f.next_succ == 0) {
            f.next_succ = 1;
            int p = col_to_row_[f.node - n_];
            if (!fixed_row_[p]) return p;
        }
        return -1;
    }

    // Re-matches row p to column q by flipping the alternating cycle closed
    // by the (unmatched, tight) edge p -> q and a directed path q ~> p.
    void rotate(int p, int q) {
        std::vector<int> parent(2 * n_, -1);
        std::vector<int> dfs;
        dfs.push_back(n_ + q);
        parent[n_ + q] = n_ + q;
        while (!dfs.empty()) {
            int node = dfs.back();
            dfs.pop_back();
            if (node == p) break;
            for_each_succ(node, [&](int succ) {
                if (parent[succ] == -1) {
                    parent[succ] = node;
                    dfs.push_back(succ);
                }
            });
        }
        // Walk p back to q, flipping matched edges as we go.
        std::vector<int> path;
        for (int node = p; node != n_ + q; node = parent[node]) {
            if (node < 0) throw std::logic_error("assignment tie-break: broken alternating path");
            path.push_back(node);
        }
        path.push_back(n_ + q);
        // path = [p, ..., q]; reversed it is the directed path q ~> p with
        // matched edges (col -> row) in odd steps.
        std::reverse(path.begin(), path.end());
        for (std::size_t k = 1; k + 1 < path.size(); k += 2) {
            int row = path[k];
            int col = path[k + 1] - n_;
            match_[row] = col;
            col_to_row_[col] = row;
        }
        match_[p] = q;
        col_to_row_[q] = p;
    }

    const CostMatrix& c_;
    int n_;
    std::vector<int> match_;
    std::vector<std::int64_t> u_, v_;
    std::vector<int> col_to_row_;
    std::vector<char> fixed_row_, fixed_col_;
    std::vector<int> scc_, index_, low_;
    std::vector<char> on_stack_;
    std::vector<int> stack_;
    int next_index_ = 0;
    int scc_count_ = 0;
};

std::int64_t pairing_weight(const CostMatrix& c, const std::vector<int>& pairing) {
    std::int64_t w = 0;
    for (int p = 0; p < c.size; ++p) w += c.at(p, pairing[p]);
    return w;
}

}  // namespace

Assignment solve_assignment(const CostMatrix& c) {
    Assignment a;
    if (c.size == 0) return a;
    for (std::int64_t w : c.costs)
        if (w < 0) throw std::invalid_argument("solve_assignment: costs must be nonnegative");
    JvResult jv = jv_solve(c);
    LexRefiner refiner(c, jv);
    a.pairing = refiner.run();
    a.total_weight = pairing_weight(c, a.pairing);
    return a;
}

Assignment solve_assignment_reduced(const CostMatrix& c, const FerrersProfile& f, int m) {
    Assignment a;
    const int n = c.size;
    if (n == 0) return a;

    auto conj = [&](int p) { return f.conjugate[c.ferrers_cols[p]]; };

    // All staircase columns equal: every pairing costs the same, identity is
    // the lexicographic minimum.
    bool all_equal = true;
    for (int p = 1; p < n && all_equal; ++p) all_equal = conj(p) == conj(0);
    if (all_equal) {
        a.pairing.resize(n);
        for (int p = 0; p < n; ++p) {
            a.pairing[p] = p;
            a.total_weight += c.at(p, p);
        }
        return a;
    }

    // Staircase columns that are all-zero or all-one produce constant cost
    // rows; take them out and solve the rest.
    std::vector<int> kept, dropped;
    for (int p = 0; p < n; ++p) {
        if (conj(p) == 0 || conj(p) == m)
            dropped.push_back(p);
        else
            kept.push_back(p);
    }

    if (dropped.empty()) return solve_assignment(c);

    // Rectangular kept x n problem, padded with zero rows to square so the
    // square solver can be reused.
    CostMatrix padded;
    padded.size = n;
    padded.costs.assign(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t t = 0; t < kept.size(); ++t)
        for (int q = 0; q < n; ++q)
            padded.at(static_cast<int>(t), q) = c.at(kept[t], q);
    Assignment sub = solve_assignment(padded);

    a.pairing.assign(n, -1);
    for (std::size_t t = 0; t < kept.size(); ++t) a.pairing[kept[t]] = sub.pairing[t];
    // The zero padding rows were appended in ascending dropped order, and the
    // lexicographic solve hands them the leftover columns in ascending order.
    for (std::size_t t = 0; t < dropped.size(); ++t)
        a.pairing[dropped[t]] = sub.pairing[kept.size() + t];
    a.total_weight = pairing_weight(c, a.pairing);
    return a;
}

}  // namespace isodisc

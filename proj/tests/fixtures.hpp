#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "isodisc/assignment.hpp"
#include "isodisc/matrix.hpp"

namespace fixtures {

// 6x4, margins (3,3,3,2,2,2) / (6,3,3,3), discrepancy 4.
inline isodisc::BinaryMatrix example1_a() {
    return isodisc::BinaryMatrix::from_rows({{1, 0, 1, 1},
                                             {1, 0, 1, 1},
                                             {1, 1, 0, 1},
                                             {1, 1, 0, 0},
                                             {1, 1, 0, 0},
                                             {1, 0, 1, 0}});
}

// example1_a with columns 3 and 4 exchanged, discrepancy 3.
inline isodisc::BinaryMatrix example1_b() {
    return isodisc::BinaryMatrix::from_rows({{1, 0, 1, 1},
                                             {1, 0, 1, 1},
                                             {1, 1, 1, 0},
                                             {1, 1, 0, 0},
                                             {1, 1, 0, 0},
                                             {1, 0, 0, 1}});
}

// Staircase matrix shared by both example1 matrices.
inline isodisc::BinaryMatrix example1_f() {
    return isodisc::BinaryMatrix::from_rows({{1, 1, 1, 0},
                                             {1, 1, 1, 0},
                                             {1, 1, 1, 0},
                                             {1, 1, 0, 0},
                                             {1, 1, 0, 0},
                                             {1, 1, 0, 0}});
}

// 6x4 with the same margins; its whole isomorphic class has discrepancy 4
// even though the margin bound is 3.
inline isodisc::BinaryMatrix example2_m() {
    return isodisc::BinaryMatrix::from_rows({{1, 0, 1, 1},
                                             {1, 1, 1, 0},
                                             {1, 1, 0, 1},
                                             {1, 1, 0, 0},
                                             {1, 0, 0, 1},
                                             {1, 0, 1, 0}});
}

// 3x5 two-block instance: column sums (2,2,1,1,1).
inline isodisc::BinaryMatrix example3_a() {
    return isodisc::BinaryMatrix::from_rows({{1, 1, 0, 1, 0},
                                             {0, 1, 1, 0, 0},
                                             {1, 0, 0, 0, 1}});
}

inline isodisc::BinaryMatrix random_matrix(std::mt19937& rng, int m, int n, double density) {
    isodisc::BinaryMatrix a = isodisc::BinaryMatrix::zeros(m, n);
    std::bernoulli_distribution bit(density);
    for (auto& e : a.entries) e = bit(rng) ? 1 : 0;
    return a;
}

// Mixed densities including the all-zero and all-one extremes.
inline isodisc::BinaryMatrix random_mixed_matrix(std::mt19937& rng, int max_dim) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> kind(0, 9);
    int m = dim(rng), n = dim(rng);
    int k = kind(rng);
    if (k == 0) return isodisc::BinaryMatrix::zeros(m, n);
    if (k == 1) {
        isodisc::BinaryMatrix a = isodisc::BinaryMatrix::zeros(m, n);
        std::fill(a.entries.begin(), a.entries.end(), 1);
        return a;
    }
    std::uniform_real_distribution<double> dens(0.05, 0.95);
    return random_matrix(rng, m, n, dens(rng));
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline isodisc::CostMatrix make_cost_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
    isodisc::CostMatrix c;
    c.size = static_cast<int>(rows.size());
    for (const auto& r : rows)
        c.costs.insert(c.costs.end(), r.begin(), r.end());
    c.ferrers_cols.resize(c.size);
    std::iota(c.ferrers_cols.begin(), c.ferrers_cols.end(), 0);
    return c;
}

// Exhaustive assignment oracle: minimum weight, and the lexicographically
// smallest pairing achieving it (next_permutation enumerates in lex order,
// so the first optimum found is that pairing).
struct BruteForceAssignment {
    std::vector<int> pairing;
    std::int64_t total_weight = std::numeric_limits<std::int64_t>::max();
};

inline BruteForceAssignment brute_force_assignment(const isodisc::CostMatrix& c) {
    BruteForceAssignment best;
    std::vector<int> perm(c.size);
    std::iota(perm.begin(), perm.end(), 0);
    if (c.size == 0) {
        best.total_weight = 0;
        return best;
    }
    do {
        std::int64_t w = 0;
        for (int p = 0; p < c.size; ++p) w += c.at(p, perm[p]);
        if (w < best.total_weight) {
            best.total_weight = w;
            best.pairing = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace fixtures

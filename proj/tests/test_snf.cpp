#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "fcx/rng.hpp"
#include "fcx/snf.hpp"

using namespace fcx;
using BigInt = boost::multiprecision::cpp_int;

namespace {

SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& d) {
    int rows = static_cast<int>(d.size());
    int cols = rows ? static_cast<int>(d[0].size()) : 0;
    SparseIntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (d[r][c]) m.add_entry(c, r, d[r][c]);
    return m;
}

// Independent oracle: invariant factors from gcds of k x k minors,
// d_k = gcd over all minors, factor_k = d_k / d_{k-1}. Exponential, so only
// for tiny matrices, but it shares no code with the elimination path.
BigInt minor_det(const std::vector<std::vector<long long>>& a, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    if (k == 1) return BigInt(a[rows[0]][cols[0]]);
    BigInt det = 0;
    for (int i = 0; i < k; ++i) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (int j = 0; j < k; ++j)
            if (j != i) sub_cols.push_back(cols[j]);
        BigInt term = BigInt(a[rows[0]][cols[i]]) * minor_det(a, sub_rows, sub_cols);
        det += (i % 2 == 0) ? term : -term;
    }
    return det;
}

void subsets_of(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

SnfResult minor_gcd_oracle(const std::vector<std::vector<long long>>& a) {
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : 0;
    SnfResult out;
    BigInt prev = 1;
    for (int k = 1; k <= std::min(m, n); ++k) {
        std::vector<std::vector<int>> rsets, csets;
        subsets_of(m, k, rsets);
        subsets_of(n, k, csets);
        BigInt g = 0;
        for (const auto& rs : rsets)
            for (const auto& cs : csets) g = gcd(g, minor_det(a, rs, cs));
        if (g == 0) break;
        out.rank = k;
        BigInt factor = g / prev;
        if (factor > 1) out.invariant_factors.push_back(factor.convert_to<long long>());
        prev = g;
    }
    return out;
}

// Rank over Q by fraction-free elimination, as a second independent route.
long long rational_rank(std::vector<std::vector<BigInt>> a) {
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < m; ++r) {
            if (a[r][col] == 0) continue;
            BigInt f1 = a[rank][col], f2 = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] = a[r][c] * f1 - a[rank][c] * f2;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<long long>> random_dense(SplitMix64& rng, int rows, int cols,
                                                 int span) {
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols, 0));
    for (auto& row : a)
        for (auto& v : row)
            v = static_cast<long long>(rng.below(2 * span + 1)) - span;
    return a;
}

} // namespace

TEST_CASE("diagonal and degenerate inputs") {
    CHECK(smith_normal_form(from_dense({{2, 0}, {0, 6}})) ==
          SnfResult{2, {2, 6}});
    CHECK(smith_normal_form(from_dense({{0, 0}, {0, 0}})) == SnfResult{0, {}});
    CHECK(smith_normal_form(SparseIntMatrix(0, 0)) == SnfResult{0, {}});
    CHECK(smith_normal_form(SparseIntMatrix(0, 5)) == SnfResult{0, {}});
    CHECK(smith_normal_form(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
          SnfResult{3, {}});
    // Diagonal that violates the divisibility chain gets renormalized.
    CHECK(smith_normal_form(from_dense({{4, 0}, {0, 6}})) == SnfResult{2, {2, 12}});
}

TEST_CASE("projective plane boundary") {
    // Minimal 6-vertex triangulation; the classical Z/2 in first homology.
    std::vector<std::array<int, 3>> tri = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                           {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                           {2, 4, 5}, {3, 4, 5}};
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
    auto edge_id = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == std::make_pair(u, v)) return static_cast<int>(i);
        return -1;
    };
    SparseIntMatrix d2(15, 10);
    for (int t = 0; t < 10; ++t) {
        auto [a, b, c] = tri[t];
        d2.add_entry(t, edge_id(b, c), 1);
        d2.add_entry(t, edge_id(a, c), -1);
        d2.add_entry(t, edge_id(a, b), 1);
    }
    SnfResult s2 = smith_normal_form(d2);
    CHECK(s2.rank == 10); // trivial kernel: no 2-cycles on a nonorientable surface
    CHECK(s2.invariant_factors == std::vector<long long>{2});

    SparseIntMatrix d1(6, 15);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        d1.add_entry(static_cast<int>(e), edges[e].first, -1);
        d1.add_entry(static_cast<int>(e), edges[e].second, 1);
    }
    SnfResult s1 = smith_normal_form(d1);
    CHECK(s1.rank == 5);
    CHECK(s1.invariant_factors.empty());
    // Together: H_1 = Z^(15 - 5 - 10) + Z/2 = Z/2, matching chi = 1.
}

TEST_CASE("matches the minor-gcd oracle on small random matrices") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(4));
        int cols = 1 + static_cast<int>(rng.below(5));
        auto a = random_dense(rng, rows, cols, 4);
        SnfResult expect = minor_gcd_oracle(a);
        SnfResult got = smith_normal_form(from_dense(a));
        CAPTURE(trial);
        CHECK(got == expect);
    }
}

TEST_CASE("rank matches fraction-free elimination on larger random matrices") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        int rows = 10 + static_cast<int>(rng.below(15));
        int cols = 10 + static_cast<int>(rng.below(20));
        auto a = random_dense(rng, rows, cols, 3);
        std::vector<std::vector<BigInt>> b(rows, std::vector<BigInt>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) b[r][c] = a[r][c];
        CHECK(smith_normal_form(from_dense(a)).rank == rational_rank(b));
    }
}

TEST_CASE("divisibility chain holds") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_dense(rng, 4, 4, 9);
        auto got = smith_normal_form(from_dense(a));
        for (std::size_t i = 0; i + 1 < got.invariant_factors.size(); ++i)
            CHECK(got.invariant_factors[i + 1] % got.invariant_factors[i] == 0);
    }
}

TEST_CASE("int64 overflow escalates to exact big integers") {
    long long big = 1LL << 61;
    auto m = from_dense({{1, big}, {-1, big}});
    SnfResult got = smith_normal_form(m);
    CHECK(got.rank == 2);
    CHECK(got.invariant_factors == std::vector<long long>{1LL << 62});
}

TEST_CASE("transpose preserves rank and factors") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_dense(rng, 3 + static_cast<int>(rng.below(3)),
                              3 + static_cast<int>(rng.below(3)), 5);
        auto m = from_dense(a);
        CHECK(smith_normal_form(m) == smith_normal_form(m.transposed()));
    }
}

TEST_CASE("triplet text round trip") {
    auto m = from_dense({{0, 2, 0}, {1, 0, -3}});
    auto back = SparseIntMatrix::from_triplet_text(m.to_triplet_text());
    CHECK(back.rows == m.rows);
    CHECK(back.cols == m.cols);
    CHECK(smith_normal_form(back) == smith_normal_form(m));
}

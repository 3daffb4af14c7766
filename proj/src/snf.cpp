#include "fcx/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace fcx {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct OverflowSignal {};

// Checked int64 helpers; the engine falls back to BigInt when these fire.
inline long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw OverflowSignal{};
    return static_cast<long long>(r);
}
inline long long checked_sub(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) - b;
    if (r > INT64_MAX || r < INT64_MIN) throw OverflowSignal{};
    return static_cast<long long>(r);
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <typename I>
class SparseEliminator {
public:
    explicit SparseEliminator(const SparseIntMatrix& m)
        : rows_(m.rows), col_rows_(m.cols), unit_count_(m.rows, 0) {
        for (int c = 0; c < m.cols; ++c)
            for (auto [r, v] : m.columns[c]) {
                rows_[r][c] = I(v);
                col_rows_[c].insert(r);
                if (is_unit(I(v))) ++unit_count_[r];
            }
        for (int r = 0; r < m.rows; ++r)
            if (unit_count_[r] > 0) unit_rows_.insert({static_cast<int>(rows_[r].size()), r});
    }

    // Peels unit pivots until none remain; returns the number peeled.
    long long eliminate_units() {
        long long rank = 0;
        while (!unit_rows_.empty()) {
            int r0 = unit_rows_.begin()->second;
            // Smallest unit entry column within the smallest eligible row.
            int c0 = -1;
            std::size_t best_col_size = 0;
            I v0{};
            for (const auto& [c, v] : rows_[r0]) {
                if (!is_unit(v)) continue;
                std::size_t sz = col_rows_[c].size();
                if (c0 < 0 || sz < best_col_size) {
                    c0 = c;
                    best_col_size = sz;
                    v0 = v;
                }
            }
            // Clear column c0 by row operations.
            std::vector<int> targets(col_rows_[c0].begin(), col_rows_[c0].end());
            for (int r : targets) {
                if (r == r0) continue;
                I f = rows_[r].at(c0) / v0;
                subtract_row(r, r0, f);
            }
            retire_pivot(r0, c0);
            ++rank;
        }
        return rank;
    }

    // Remaining nonzero entries as a dense core (row/col compacted).
    std::vector<std::vector<BigInt>> dense_core() const {
        std::map<int, int> row_id, col_id;
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
            if (!rows_[r].empty()) row_id.emplace(r, static_cast<int>(row_id.size()));
        for (int c = 0; c < static_cast<int>(col_rows_.size()); ++c)
            if (!col_rows_[c].empty()) col_id.emplace(c, static_cast<int>(col_id.size()));
        std::vector<std::vector<BigInt>> d(row_id.size(), std::vector<BigInt>(col_id.size(), 0));
        for (auto [r, ri] : row_id)
            for (const auto& [c, v] : rows_[r]) d[ri][col_id.at(c)] = BigInt(v);
        return d;
    }

private:
    void subtract_row(int r, int r0, const I& f) {
        bool listed = unit_count_[r] > 0;
        int old_size = static_cast<int>(rows_[r].size());
        if (listed) unit_rows_.erase({old_size, r});
        for (const auto& [c, pv] : rows_[r0]) {
            I delta = checked_mul(f, pv);
            auto it = rows_[r].find(c);
            if (it == rows_[r].end()) {
                I nv = checked_sub(I(0), delta);
                if (nv != 0) {
                    rows_[r].emplace(c, nv);
                    col_rows_[c].insert(r);
                    if (is_unit(nv)) ++unit_count_[r];
                }
            } else {
                if (is_unit(it->second)) --unit_count_[r];
                I nv = checked_sub(it->second, delta);
                if (nv == 0) {
                    rows_[r].erase(it);
                    col_rows_[c].erase(r);
                } else {
                    it->second = nv;
                    if (is_unit(nv)) ++unit_count_[r];
                }
            }
        }
        if (unit_count_[r] > 0) unit_rows_.insert({static_cast<int>(rows_[r].size()), r});
    }

    void retire_pivot(int r0, int c0) {
        unit_rows_.erase({static_cast<int>(rows_[r0].size()), r0});
        for (const auto& [c, v] : rows_[r0]) col_rows_[c].erase(r0);
        rows_[r0].clear();
        unit_count_[r0] = 0;
        (void)c0; // column already cleared above
    }

    std::vector<std::map<int, I>> rows_;
    std::vector<std::set<int>> col_rows_;
    std::vector<int> unit_count_;
    std::set<std::pair<int, int>> unit_rows_; // (row size, row), rows holding a unit
};

// Classical dense diagonalization with minimum-|value| pivoting. The chain
// condition is restored afterwards by gcd/lcm normalization of the diagonal,
// which yields the same invariant factors.
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> d) {
    std::vector<BigInt> diag;
    int m = static_cast<int>(d.size());
    int n = m ? static_cast<int>(d[0].size()) : 0;
    int t = 0;
    while (t < m && t < n) {
        int pr = -1, pc = -1;
        for (int r = t; r < m; ++r)
            for (int c = t; c < n; ++c)
                if (d[r][c] != 0 &&
                    (pr < 0 || abs(d[r][c]) < abs(d[pr][pc])))
                    pr = r, pc = c;
        if (pr < 0) break;
        std::swap(d[t], d[pr]);
        for (int r = 0; r < m; ++r) std::swap(d[r][t], d[r][pc]);
        while (true) {
            bool clean = true;
            for (int r = t + 1; r < m; ++r) {
                if (d[r][t] == 0) continue;
                BigInt f = d[r][t] / d[t][t];
                for (int c = t; c < n; ++c) d[r][c] -= f * d[t][c];
                if (d[r][t] != 0) { // remainder became the smaller pivot
                    std::swap(d[t], d[r]);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (int c = t + 1; c < n; ++c) {
                if (d[t][c] == 0) continue;
                BigInt f = d[t][c] / d[t][t];
                for (int r = t; r < m; ++r) d[r][c] -= f * d[r][t];
                if (d[t][c] != 0) {
                    for (int r = t; r < m; ++r) std::swap(d[r][t], d[r][c]);
                    clean = false;
                    break;
                }
            }
            if (clean) break;
        }
        diag.push_back(abs(d[t][t]));
        ++t;
    }
    return diag;
}

long long to_int64(const BigInt& v) {
    if (v > BigInt(INT64_MAX))
        throw std::runtime_error("invariant factor exceeds int64: " + v.str());
    return v.convert_to<long long>();
}

void normalize_chain(std::vector<BigInt>& diag) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j)
                if (diag[j] % diag[i] != 0) {
                    BigInt g = gcd(diag[i], diag[j]);
                    BigInt l = diag[i] / g * diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
    }
    std::sort(diag.begin(), diag.end());
}

template <typename I>
SnfResult run_snf(const SparseIntMatrix& m) {
    SparseEliminator<I> elim(m);
    SnfResult out;
    out.rank = elim.eliminate_units();
    auto diag = dense_diagonal(elim.dense_core());
    normalize_chain(diag);
    for (const auto& v : diag) {
        ++out.rank;
        if (v > 1) out.invariant_factors.push_back(to_int64(v));
    }
    return out;
}

} // namespace

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix t(cols, rows);
    for (int c = 0; c < cols; ++c)
        for (auto [r, v] : columns[c]) t.add_entry(r, c, v);
    for (auto& col : t.columns)
        std::sort(col.begin(), col.end());
    return t;
}

std::string SparseIntMatrix::to_triplet_text() const {
    std::ostringstream os;
    os << rows << " " << cols << " " << nonzeros() << "\n";
    for (int c = 0; c < cols; ++c)
        for (auto [r, v] : columns[c]) os << r << " " << c << " " << v << "\n";
    return os.str();
}

SparseIntMatrix SparseIntMatrix::from_triplet_text(const std::string& text) {
    std::istringstream is(text);
    long long rows, cols, nnz;
    if (!(is >> rows >> cols >> nnz))
        throw std::invalid_argument("triplet text needs a 'rows cols nnz' header");
    SparseIntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    long long r, c, v;
    while (is >> r >> c >> v)
        m.add_entry(static_cast<int>(c), static_cast<int>(r), v);
    for (auto& col : m.columns) std::sort(col.begin(), col.end());
    return m;
}

SnfResult smith_normal_form(const SparseIntMatrix& m) {
    try {
        return run_snf<long long>(m);
    } catch (const OverflowSignal&) {
        return run_snf<BigInt>(m);
    }
}

} // namespace fcx

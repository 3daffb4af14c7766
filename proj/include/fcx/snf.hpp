#ifndef FCX_SNF_HPP
#define FCX_SNF_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fcx {

// Sparse integer matrix in column-major triplet form. Entries within a
// column are sorted by row and nonzero.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> columns;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

    void add_entry(int col, int row, long long value) {
        columns[col].emplace_back(row, value);
    }

    long long nonzeros() const {
        long long nnz = 0;
        for (const auto& c : columns) nnz += static_cast<long long>(c.size());
        return nnz;
    }

    SparseIntMatrix transposed() const;

    // "rows cols nnz" header then one "row col value" line per entry.
    std::string to_triplet_text() const;
    static SparseIntMatrix from_triplet_text(const std::string& text);
};

// rank counts all nonzero diagonal entries of the normal form;
// invariant_factors lists only the entries > 1, each dividing the next.
struct SnfResult {
    long long rank = 0;
    std::vector<long long> invariant_factors;

    bool operator==(const SnfResult& o) const {
        return rank == o.rank && invariant_factors == o.invariant_factors;
    }
};

// Exact Smith normal form over Z. Unit (|v| = 1) pivots are eliminated
// sparsely first, smallest-row-then-smallest-column; the remaining core is
// finished densely with arbitrary-precision integers, so the result is exact
// at all sizes.
SnfResult smith_normal_form(const SparseIntMatrix& m);

} // namespace fcx

#endif // FCX_SNF_HPP

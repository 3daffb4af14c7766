#ifndef FCX_HOMOLOGY_HPP
#define FCX_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcx/complex.hpp"
#include "fcx/graph.hpp"
#include "fcx/limits.hpp"
#include "fcx/snf.hpp"

namespace fcx {

struct DimHomology {
    long long betti = 0;
    std::vector<long long> torsion; // invariant factors >= 2, each dividing the next

    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool operator==(const DimHomology& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
};

// Reduced (co)homology per dimension, including dimension -1. Dimensions not
// recorded are trivial; comparisons treat them as such.
class HomologyProfile {
public:
    void set(int q, DimHomology h) { dims_[q] = std::move(h); }
    void set_betti(int q, long long betti) { dims_[q].betti = betti; }

    DimHomology at(int q) const {
        auto it = dims_.find(q);
        return it == dims_.end() ? DimHomology{} : it->second;
    }

    const std::map<int, DimHomology>& entries() const { return dims_; }

    bool all_trivial() const {
        for (const auto& [q, h] : dims_)
            if (!h.trivial()) return false;
        return true;
    }

    bool has_torsion() const {
        for (const auto& [q, h] : dims_)
            if (!h.torsion.empty()) return true;
        return false;
    }

    // Sum of (-1)^q betti over recorded dimensions (torsion is invisible).
    long long euler() const {
        long long chi = 0;
        for (const auto& [q, h] : dims_) chi += (q % 2 == 0 ? h.betti : -h.betti);
        return chi;
    }

    bool same_as(const HomologyProfile& o) const;

    HomologyProfile shifted(int by) const {
        HomologyProfile out;
        for (const auto& [q, h] : dims_) out.set(q + by, h);
        return out;
    }

    // Wedge arithmetic: betti adds, torsion factor multisets merge.
    static HomologyProfile wedge_sum(const HomologyProfile& a, const HomologyProfile& b);

    std::string to_string() const;

private:
    std::map<int, DimHomology> dims_;
};

// {"dims": {"q": {"betti": b, "torsion": [...]}}, "euler": int}
std::string profile_to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const std::string& text);

// --- boundary matrices -------------------------------------------------------

// Column per q-face (lexicographic), row per (q-1)-face; entry at position i
// of a sorted simplex is (-1)^i. q = 0 yields the augmentation row.
SparseIntMatrix boundary_matrix(const Graph& g, const DegreeBound& d, int q,
                                const Budget& = {});
SparseIntMatrix boundary_matrix_of_complex(const SimplicialComplex& k, int q,
                                           const Budget& = {});

// --- (co)homology -------------------------------------------------------------

// Reduced integer homology of the forest complex at dimensions lo..hi
// (lo >= -1). Touches faces only in [lo-1, hi+1].
HomologyProfile reduced_homology(const Graph& g, const DegreeBound& d, int lo, int hi,
                                 const Budget& = {});

// Full range [-1, dim].
HomologyProfile full_reduced_homology(const Graph& g, const DegreeBound& d,
                                      const Budget& = {});

HomologyProfile reduced_homology_of_complex(const SimplicialComplex& k, int lo, int hi,
                                            const Budget& = {});
HomologyProfile full_reduced_homology_of_complex(const SimplicialComplex& k,
                                                 const Budget& = {});

// Reduced integer cohomology from Smith normal forms of the transposed
// boundaries: betti^q = betti_q, torsion^q = torsion_(q-1).
HomologyProfile reduced_cohomology_of_complex(const SimplicialComplex& k, int lo, int hi,
                                              const Budget& = {});

// Homology of the quotient chain complex C(F_big)/C(F_small); not reduced.
HomologyProfile relative_homology(const Graph& g, const DegreeBound& d_small,
                                  const DegreeBound& d_big, int lo, int hi,
                                  const Budget& = {});

// --- wedge recognition -----------------------------------------------------------

struct WedgeResult {
    bool ok = false;
    std::map<int, long long> spheres; // sphere dimension -> copy count
    int offending_dim = 0;
    std::string reason;
};

// Accepts profiles of connected, torsion-free spaces (betti_-1 = betti_0 = 0).
WedgeResult profile_as_wedge(const HomologyProfile& p);

} // namespace fcx

#endif // FCX_HOMOLOGY_HPP

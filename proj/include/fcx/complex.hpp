#ifndef FCX_COMPLEX_HPP
#define FCX_COMPLEX_HPP

#include <string>
#include <vector>

#include "fcx/bitset.hpp"
#include "fcx/degree_bound.hpp"
#include "fcx/graph.hpp"
#include "fcx/limits.hpp"

namespace fcx {

inline constexpr int kVoidDim = -2;

// Finite simplicial complex stored as an explicit ground vertex count plus
// the antichain of facets, kept in lexicographic order.
//
// Two degenerate complexes are distinguished: the VOID complex (no simplices
// at all, facet list []) and the EMPTY complex (only the empty simplex,
// facet list [{}], the (-1)-sphere). Ground vertices need not appear in any
// facet; such ghost vertices still count for Alexander duality.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int ground) {
        SimplicialComplex k;
        k.ground_ = check_ground(ground);
        return k;
    }

    static SimplicialComplex empty_complex(int ground) {
        SimplicialComplex k;
        k.ground_ = check_ground(ground);
        k.facets_.push_back(VertexSet{});
        return k;
    }

    static SimplicialComplex simplex(int ground) { // the full simplex on ground vertices
        return from_facets(ground, {VertexSet::full(ground)});
    }

    static SimplicialComplex point() { return simplex(1); }

    static SimplicialComplex two_points() { // S^0
        return from_facets(2, {VertexSet::of({0}), VertexSet::of({1})});
    }

    // Canonicalizes: drops dominated faces and duplicates, sorts lexicographically.
    // An empty list yields VOID; a list reducing to {∅} yields EMPTY.
    static SimplicialComplex from_facets(int ground, std::vector<VertexSet> facets);

    int ground() const { return ground_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

    // -1 for EMPTY, kVoidDim for VOID.
    int dim() const;

    bool contains(const VertexSet& face) const;

    bool operator==(const SimplicialComplex& o) const {
        return ground_ == o.ground_ && facets_ == o.facets_;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

    // True if every facet of sub is a face of *this.
    bool has_subcomplex(const SimplicialComplex& sub) const;

private:
    static int check_ground(int ground);
    int ground_ = 0;
    std::vector<VertexSet> facets_;
};

// --- forest complexes -------------------------------------------------------

// Maximal vertex sets inducing forests with the given degree cap.
// The 0-vertex graph yields the EMPTY complex.
SimplicialComplex forest_complex(const Graph& g, const DegreeBound& d, const Budget& = {});

// All faces of one dimension, lexicographically ordered; q = -1 yields {∅}.
std::vector<VertexSet> faces_of_dim(const Graph& g, const DegreeBound& d, int q,
                                    const Budget& = {});

// Per-dimension face counts for q in [0, up_to], without storing the faces.
std::vector<long long> face_counts(const Graph& g, const DegreeBound& d, int up_to,
                                   const Budget& = {});

// Largest induced forest under the cap; equals dim(forest_complex) + 1.
int t_d(const Graph& g, const DegreeBound& d);

// --- constructions ---------------------------------------------------------

SimplicialComplex skeleton(const SimplicialComplex& k, int q, const Budget& = {});

// VOID if sigma is not a face (documented, not an error). Ground unchanged.
SimplicialComplex link(const SimplicialComplex& k, const VertexSet& sigma);
SimplicialComplex star(const SimplicialComplex& k, const VertexSet& sigma);

// Ground l is relabeled by +k.ground(). VOID absorbs; EMPTY is the identity.
SimplicialComplex join_complex(const SimplicialComplex& k, const SimplicialComplex& l);

SimplicialComplex cone(const SimplicialComplex& k);       // join with a fresh point
SimplicialComplex suspension(const SimplicialComplex& k); // join with S^0

// Appends a fresh apex a = ground(k) and the facets {F ∪ {a} : F facet of sub},
// re-maximalized. sub must be a subcomplex of k.
SimplicialComplex add_cone_over_subcomplex(const SimplicialComplex& k,
                                           const SimplicialComplex& sub);

// X* = {σ ⊆ ground : complement(σ) ∉ X}. Enumerates all 2^ground subsets.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

// Faces of one dimension enumerated from the facets (deduplicated, lex order).
std::vector<VertexSet> complex_faces_of_dim(const SimplicialComplex& k, int q,
                                            const Budget& = {});

// f_{-1}, f_0, f_1, ... (index shifted by one: fv[q + 1] = f_q).
std::vector<long long> f_vector(const SimplicialComplex& k, const Budget& = {});

// Reduced Euler characteristic: sum of (-1)^q f_q over q >= 0, minus f_{-1}.
long long euler_characteristic(const SimplicialComplex& k, const Budget& = {});

// --- serialization ----------------------------------------------------------

// {"ground": int, "facets": [[v, ...], ...]}; [[]] encodes EMPTY, [] encodes VOID.
std::string complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const std::string& text);

} // namespace fcx

#endif // FCX_COMPLEX_HPP

#include "fcx/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace fcx {

namespace {

// Face slices for one chain complex, cached per dimension.
class FaceSource {
public:
    virtual ~FaceSource() = default;
    virtual bool nonvoid() const = 0;

    const std::vector<VertexSet>& faces(int q) {
        if (q < 0) return empty_;
        auto it = cache_.find(q);
        if (it == cache_.end()) it = cache_.emplace(q, compute(q)).first;
        return it->second;
    }

protected:
    virtual std::vector<VertexSet> compute(int q) = 0;

private:
    std::map<int, std::vector<VertexSet>> cache_;
    std::vector<VertexSet> empty_;
};

class ForestFaces : public FaceSource {
public:
    ForestFaces(const Graph& g, DegreeBound d, Budget budget)
        : g_(g), d_(d), budget_(budget) {}
    bool nonvoid() const override { return true; }

protected:
    std::vector<VertexSet> compute(int q) override { return faces_of_dim(g_, d_, q, budget_); }

private:
    const Graph& g_;
    DegreeBound d_;
    Budget budget_;
};

class ComplexFaces : public FaceSource {
public:
    ComplexFaces(const SimplicialComplex& k, Budget budget) : k_(k), budget_(budget) {}
    bool nonvoid() const override { return !k_.is_void(); }

protected:
    std::vector<VertexSet> compute(int q) override {
        return complex_faces_of_dim(k_, q, budget_);
    }

private:
    const SimplicialComplex& k_;
    Budget budget_;
};

// Faces of the big complex not in the small one (quotient chain basis).
class RelativeFaces : public FaceSource {
public:
    RelativeFaces(const Graph& g, DegreeBound small, DegreeBound big, Budget budget)
        : g_(g), small_(small), big_(big), budget_(budget) {}
    bool nonvoid() const override { return true; }

protected:
    std::vector<VertexSet> compute(int q) override {
        auto big = faces_of_dim(g_, big_, q, budget_);
        auto small = faces_of_dim(g_, small_, q, budget_);
        std::vector<VertexSet> out;
        std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                            std::back_inserter(out), VertexSetLexLess{});
        return out;
    }

private:
    const Graph& g_;
    DegreeBound small_, big_;
    Budget budget_;
};

// Boundary of the q-faces against the given (q-1)-face basis. Faces missing
// from the basis are dropped (used by the quotient complex); for absolute
// homology every boundary face is present.
SparseIntMatrix build_boundary(const std::vector<VertexSet>& rows,
                               const std::vector<VertexSet>& cols) {
    SparseIntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    std::unordered_map<VertexSet, int, VertexSetHash> row_index;
    row_index.reserve(rows.size() * 2);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_index.emplace(rows[i], i);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        std::vector<int> verts = cols[c].to_vector();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            VertexSet face = cols[c];
            face.reset(verts[i]);
            auto it = row_index.find(face);
            if (it == row_index.end()) continue;
            m.add_entry(c, it->second, i % 2 == 0 ? 1 : -1);
        }
        std::sort(m.columns[c].begin(), m.columns[c].end());
    }
    return m;
}

// ∂_q for the chain complex described by the source. With augmentation, q = 0
// maps every vertex to the empty simplex.
SparseIntMatrix boundary_of(FaceSource& src, int q, bool augmented) {
    if (q < 0) return SparseIntMatrix(0, 0);
    if (q == 0) {
        const auto& verts = src.faces(0);
        if (!augmented) return SparseIntMatrix(0, static_cast<int>(verts.size()));
        SparseIntMatrix m(src.nonvoid() ? 1 : 0, static_cast<int>(verts.size()));
        if (src.nonvoid())
            for (int c = 0; c < m.cols; ++c) m.add_entry(c, 0, 1);
        return m;
    }
    return build_boundary(src.faces(q - 1), src.faces(q));
}

long long face_count(FaceSource& src, int q, bool augmented) {
    if (q == -1) return augmented && src.nonvoid() ? 1 : 0;
    if (q < -1) return 0;
    return static_cast<long long>(src.faces(q).size());
}

HomologyProfile window_profile(FaceSource& src, int lo, int hi, bool augmented,
                               bool cohomology) {
    if (lo < -1) throw std::invalid_argument("window must start at dimension >= -1");
    if (hi < lo) throw std::invalid_argument("empty dimension window");
    HomologyProfile out;
    if (!src.nonvoid()) {
        for (int q = lo; q <= hi; ++q) out.set(q, DimHomology{});
        return out;
    }
    std::map<int, SnfResult> snf; // per boundary index q, of ∂_q (transposed when dualizing)
    auto snf_at = [&](int q) -> const SnfResult& {
        auto it = snf.find(q);
        if (it == snf.end()) {
            SparseIntMatrix b = boundary_of(src, q, augmented);
            it = snf.emplace(q, smith_normal_form(cohomology ? b.transposed() : b)).first;
        }
        return it->second;
    };
    auto rank_at = [&](int q) -> long long { return q < 0 ? 0 : snf_at(q).rank; };
    for (int q = lo; q <= hi; ++q) {
        DimHomology h;
        h.betti = face_count(src, q, augmented) - rank_at(q) - rank_at(q + 1);
        if (cohomology) {
            if (q >= 0) h.torsion = snf_at(q).invariant_factors;
        } else {
            h.torsion = snf_at(q + 1).invariant_factors;
        }
        out.set(q, h);
    }
    return out;
}

} // namespace

// --- HomologyProfile ---------------------------------------------------------

bool HomologyProfile::same_as(const HomologyProfile& o) const {
    std::set<int> keys;
    for (const auto& [q, h] : dims_) keys.insert(q);
    for (const auto& [q, h] : o.dims_) keys.insert(q);
    for (int q : keys)
        if (!(at(q) == o.at(q))) return false;
    return true;
}

HomologyProfile HomologyProfile::wedge_sum(const HomologyProfile& a, const HomologyProfile& b) {
    HomologyProfile out = a;
    for (const auto& [q, h] : b.dims_) {
        DimHomology merged = out.at(q);
        merged.betti += h.betti;
        merged.torsion.insert(merged.torsion.end(), h.torsion.begin(), h.torsion.end());
        std::sort(merged.torsion.begin(), merged.torsion.end());
        out.set(q, merged);
    }
    return out;
}

std::string HomologyProfile::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, h] : dims_) {
        if (h.trivial()) continue;
        if (!first) os << ", ";
        first = false;
        os << "H~" << q << " = ";
        bool plus = false;
        if (h.betti > 0) {
            os << "Z^" << h.betti;
            plus = true;
        }
        for (auto t : h.torsion) {
            if (plus) os << " + ";
            os << "Z/" << t;
            plus = true;
        }
    }
    if (first) os << "trivial";
    return os.str();
}

std::string profile_to_json(const HomologyProfile& p) {
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [q, h] : p.entries())
        dims[std::to_string(q)] = {{"betti", h.betti}, {"torsion", h.torsion}};
    nlohmann::json j = {{"dims", dims}, {"euler", p.euler()}};
    return j.dump(2) + "\n";
}

HomologyProfile profile_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    HomologyProfile p;
    for (const auto& [key, value] : j.at("dims").items()) {
        DimHomology h;
        h.betti = value.at("betti").get<long long>();
        h.torsion = value.at("torsion").get<std::vector<long long>>();
        p.set(std::stoi(key), h);
    }
    return p;
}

// --- boundary matrices ----------------------------------------------------------

SparseIntMatrix boundary_matrix(const Graph& g, const DegreeBound& d, int q,
                                const Budget& budget) {
    if (q < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    ForestFaces src(g, d, budget);
    return boundary_of(src, q, true);
}

SparseIntMatrix boundary_matrix_of_complex(const SimplicialComplex& k, int q,
                                           const Budget& budget) {
    if (q < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    ComplexFaces src(k, budget);
    return boundary_of(src, q, true);
}

// --- (co)homology -----------------------------------------------------------------

HomologyProfile reduced_homology(const Graph& g, const DegreeBound& d, int lo, int hi,
                                 const Budget& budget) {
    ForestFaces src(g, d, budget);
    return window_profile(src, lo, hi, true, false);
}

HomologyProfile full_reduced_homology(const Graph& g, const DegreeBound& d,
                                      const Budget& budget) {
    int top = t_d(g, d) - 1;
    ForestFaces src(g, d, budget);
    return window_profile(src, -1, std::max(top, 0), true, false);
}

HomologyProfile reduced_homology_of_complex(const SimplicialComplex& k, int lo, int hi,
                                            const Budget& budget) {
    ComplexFaces src(k, budget);
    return window_profile(src, lo, hi, true, false);
}

HomologyProfile full_reduced_homology_of_complex(const SimplicialComplex& k,
                                                 const Budget& budget) {
    ComplexFaces src(k, budget);
    return window_profile(src, -1, std::max(k.dim(), 0), true, false);
}

HomologyProfile reduced_cohomology_of_complex(const SimplicialComplex& k, int lo, int hi,
                                              const Budget& budget) {
    ComplexFaces src(k, budget);
    return window_profile(src, lo, hi, true, true);
}

HomologyProfile relative_homology(const Graph& g, const DegreeBound& d_small,
                                  const DegreeBound& d_big, int lo, int hi,
                                  const Budget& budget) {
    if (!(d_small <= d_big))
        throw std::invalid_argument("relative pair needs d_small <= d_big");
    if (lo < 0) lo = 0;
    RelativeFaces src(g, d_small, d_big, budget);
    return window_profile(src, lo, hi, false, false);
}

// --- wedge recognition ---------------------------------------------------------------

WedgeResult profile_as_wedge(const HomologyProfile& p) {
    WedgeResult out;
    for (const auto& [q, h] : p.entries()) {
        if (!h.torsion.empty()) {
            out.offending_dim = q;
            out.reason = "torsion present";
            return out;
        }
        if (q <= 0 && h.betti != 0) {
            out.offending_dim = q;
            out.reason = "not connected and nonempty";
            return out;
        }
    }
    out.ok = true;
    for (const auto& [q, h] : p.entries())
        if (h.betti > 0) out.spheres[q] = h.betti;
    return out;
}

} // namespace fcx

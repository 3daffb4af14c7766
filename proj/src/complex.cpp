#include "fcx/complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace fcx {

namespace {

VertexSet shifted(const VertexSet& s, int offset) {
    VertexSet out;
    s.for_each([&](int v) { out.set(v + offset); });
    return out;
}

// Depth-first enumeration of induced-forest vertex sets in lexicographic
// order. Extending only past the largest member visits every face exactly
// once, because faces are closed under taking subsets.
template <typename Visit>
void enumerate_forest_faces(const Graph& g, const DegreeBound& d, int max_size, Visit&& visit) {
    if (max_size <= 0) return;
    std::function<void(VertexSet&, int, int)> dfs = [&](VertexSet& s, int last, int size) {
        visit(s, size);
        if (size == max_size) return;
        for (int v = last + 1; v < g.n; ++v) {
            s.set(v);
            if (induced_forest_check(g, s, d))
                dfs(s, v, size + 1);
            s.reset(v);
        }
    };
    VertexSet s;
    for (int v = 0; v < g.n; ++v) {
        s.set(v);
        dfs(s, v, 1);
        s.reset(v);
    }
}

} // namespace

// --- SimplicialComplex -------------------------------------------------------

int SimplicialComplex::check_ground(int ground) {
    if (ground < 0 || ground > VertexSet::kMaxVertices)
        throw std::invalid_argument("ground count " + std::to_string(ground) + " out of range");
    return ground;
}

SimplicialComplex SimplicialComplex::from_facets(int ground, std::vector<VertexSet> facets) {
    check_ground(ground);
    for (const auto& f : facets)
        if (f.highest() >= ground)
            throw std::invalid_argument("facet " + f.to_string() + " exceeds ground " +
                                        std::to_string(ground));
    std::sort(facets.begin(), facets.end(), VertexSetLexLess{});
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VertexSet> keep;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j)
            if (j != i && facets[j].contains(facets[i])) dominated = true;
        if (!dominated) keep.push_back(facets[i]);
    }
    SimplicialComplex k;
    k.ground_ = ground;
    k.facets_ = std::move(keep);
    return k;
}

int SimplicialComplex::dim() const {
    if (is_void()) return kVoidDim;
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.count() - 1);
    return d;
}

bool SimplicialComplex::contains(const VertexSet& face) const {
    if (face.empty()) return !is_void();
    for (const auto& f : facets_)
        if (f.contains(face)) return true;
    return false;
}

bool SimplicialComplex::has_subcomplex(const SimplicialComplex& sub) const {
    if (sub.is_void()) return true;
    if (is_void()) return false;
    for (const auto& f : sub.facets())
        if (!contains(f)) return false;
    return true;
}

// --- forest complexes ---------------------------------------------------------

SimplicialComplex forest_complex(const Graph& g, const DegreeBound& d, const Budget& budget) {
    if (g.n == 0) return SimplicialComplex::empty_complex(0);
    std::vector<VertexSet> facets;
    enumerate_forest_faces(g, d, g.n, [&](const VertexSet& s, int) {
        VertexSet probe = s;
        for (int v = 0; v < g.n; ++v) {
            if (s.test(v)) continue;
            probe.set(v);
            bool extends = induced_forest_check(g, probe, d);
            probe.reset(v);
            if (extends) return;
        }
        if (static_cast<long long>(facets.size()) >= budget.max_facets)
            throw CapacityError("facet budget exceeded (" + std::to_string(budget.max_facets) + ")");
        facets.push_back(s);
    });
    return SimplicialComplex::from_facets(g.n, std::move(facets));
}

std::vector<VertexSet> faces_of_dim(const Graph& g, const DegreeBound& d, int q,
                                    const Budget& budget) {
    if (q < -1) throw std::invalid_argument("dimension must be >= -1");
    if (q == -1) return {VertexSet{}};
    std::vector<VertexSet> out;
    enumerate_forest_faces(g, d, q + 1, [&](const VertexSet& s, int size) {
        if (size != q + 1) return;
        if (static_cast<long long>(out.size()) >= budget.max_faces_per_dim)
            throw CapacityError("face budget exceeded at dimension " + std::to_string(q));
        out.push_back(s);
    });
    return out;
}

std::vector<long long> face_counts(const Graph& g, const DegreeBound& d, int up_to,
                                   const Budget& budget) {
    std::vector<long long> counts(std::max(up_to + 1, 0), 0);
    if (up_to < 0) return counts;
    enumerate_forest_faces(g, d, up_to + 1, [&](const VertexSet&, int size) {
        if (++counts[size - 1] > budget.max_faces_per_dim)
            throw CapacityError("face budget exceeded at dimension " + std::to_string(size - 1));
    });
    return counts;
}

int t_d(const Graph& g, const DegreeBound& d) {
    int best = 0;
    enumerate_forest_faces(g, d, g.n, [&](const VertexSet&, int size) {
        best = std::max(best, size);
    });
    return best;
}

// --- constructions --------------------------------------------------------------

std::vector<VertexSet> complex_faces_of_dim(const SimplicialComplex& k, int q,
                                            const Budget& budget) {
    if (q < -1) throw std::invalid_argument("dimension must be >= -1");
    if (k.is_void()) return {};
    if (q == -1) return {VertexSet{}};
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<VertexSet> out;
    int want = q + 1;
    for (const auto& facet : k.facets()) {
        int m = facet.count();
        if (m < want) continue;
        std::vector<int> verts = facet.to_vector();
        std::vector<int> idx(want);
        for (int i = 0; i < want; ++i) idx[i] = i;
        while (true) {
            VertexSet face;
            for (int i : idx) face.set(verts[i]);
            if (seen.insert(face).second) {
                if (static_cast<long long>(out.size()) >= budget.max_faces_per_dim)
                    throw CapacityError("face budget exceeded at dimension " + std::to_string(q));
                out.push_back(face);
            }
            int i = want - 1;
            while (i >= 0 && idx[i] == m - want + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), VertexSetLexLess{});
    return out;
}

SimplicialComplex skeleton(const SimplicialComplex& k, int q, const Budget& budget) {
    if (q < -1) throw std::invalid_argument("dimension must be >= -1");
    if (k.is_void()) return k;
    if (q == -1) return SimplicialComplex::empty_complex(k.ground());
    std::vector<VertexSet> candidates;
    for (const auto& f : k.facets()) {
        if (f.count() <= q + 1) {
            candidates.push_back(f);
        } else {
            for (const auto& sub : complex_faces_of_dim(
                     SimplicialComplex::from_facets(k.ground(), {f}), q, budget))
                candidates.push_back(sub);
        }
        if (static_cast<long long>(candidates.size()) > budget.max_facets)
            throw CapacityError("skeleton facet budget exceeded");
    }
    return SimplicialComplex::from_facets(k.ground(), std::move(candidates));
}

SimplicialComplex link(const SimplicialComplex& k, const VertexSet& sigma) {
    if (!k.contains(sigma)) return SimplicialComplex::void_complex(k.ground());
    std::vector<VertexSet> facets;
    for (const auto& f : k.facets())
        if (f.contains(sigma)) facets.push_back(f - sigma);
    return SimplicialComplex::from_facets(k.ground(), std::move(facets));
}

SimplicialComplex star(const SimplicialComplex& k, const VertexSet& sigma) {
    if (!k.contains(sigma)) return SimplicialComplex::void_complex(k.ground());
    std::vector<VertexSet> facets;
    for (const auto& f : k.facets())
        if (f.contains(sigma)) facets.push_back(f);
    return SimplicialComplex::from_facets(k.ground(), std::move(facets));
}

SimplicialComplex join_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
    int ground = k.ground() + l.ground();
    if (k.is_void() || l.is_void()) return SimplicialComplex::void_complex(ground);
    std::vector<VertexSet> facets;
    for (const auto& a : k.facets())
        for (const auto& b : l.facets()) facets.push_back(a | shifted(b, k.ground()));
    return SimplicialComplex::from_facets(ground, std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& k) {
    return join_complex(k, SimplicialComplex::point());
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    return join_complex(k, SimplicialComplex::two_points());
}

SimplicialComplex add_cone_over_subcomplex(const SimplicialComplex& k,
                                           const SimplicialComplex& sub) {
    if (!k.has_subcomplex(sub))
        throw std::invalid_argument("cone base is not a subcomplex");
    int apex = k.ground();
    std::vector<VertexSet> facets = k.facets();
    for (const auto& f : sub.facets()) {
        VertexSet g = f;
        g.set(apex);
        facets.push_back(g);
    }
    return SimplicialComplex::from_facets(k.ground() + 1, std::move(facets));
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
    int n = k.ground();
    if (n > 22)
        throw CapacityError("alexander dual enumerates 2^n subsets; ground " +
                            std::to_string(n) + " exceeds 22");
    std::uint32_t total = std::uint32_t{1} << n;
    std::vector<char> is_face(total, 0);
    for (const auto& f : k.facets()) {
        std::uint32_t mask = 0;
        f.for_each([&](int v) { mask |= std::uint32_t{1} << v; });
        is_face[mask] = 1;
    }
    if (!k.is_void()) is_face[0] = 1;
    for (std::uint32_t m = total - 1; m > 0; --m) {
        if (!is_face[m]) continue;
        for (std::uint32_t bits = m; bits; bits &= bits - 1) {
            std::uint32_t b = bits & (0u - bits);
            is_face[m & ~b] = 1;
        }
    }
    std::uint32_t full = total - 1;
    auto dual_face = [&](std::uint32_t m) { return !is_face[full & ~m]; };
    std::vector<VertexSet> facets;
    for (std::uint32_t m = 0; m < total; ++m) {
        if (!dual_face(m)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1) && dual_face(m | (std::uint32_t{1} << v))) maximal = false;
        if (!maximal) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) s.set(v);
        facets.push_back(s);
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

std::vector<long long> f_vector(const SimplicialComplex& k, const Budget& budget) {
    std::vector<long long> fv;
    fv.push_back(k.is_void() ? 0 : 1);
    for (int q = 0; q <= k.dim(); ++q)
        fv.push_back(static_cast<long long>(complex_faces_of_dim(k, q, budget).size()));
    return fv;
}

long long euler_characteristic(const SimplicialComplex& k, const Budget& budget) {
    auto fv = f_vector(k, budget);
    long long chi = -fv[0];
    for (std::size_t i = 1; i < fv.size(); ++i)
        chi += (i % 2 ? fv[i] : -fv[i]);
    return chi;
}

// --- serialization ---------------------------------------------------------------

std::string complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["ground"] = k.ground();
    auto facets = nlohmann::json::array();
    for (const auto& f : k.facets()) facets.push_back(f.to_vector());
    j["facets"] = facets;
    return j.dump(2) + "\n";
}

SimplicialComplex complex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int ground = j.at("ground").get<int>();
    std::vector<VertexSet> facets;
    for (const auto& f : j.at("facets"))
        facets.push_back(VertexSet::from_vector(f.get<std::vector<int>>()));
    if (facets.empty()) return SimplicialComplex::void_complex(ground);
    return SimplicialComplex::from_facets(ground, std::move(facets));
}

} // namespace fcx

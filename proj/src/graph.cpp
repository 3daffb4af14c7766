#include "fcx/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fcx/rng.hpp"
#include "json.hpp"

namespace fcx {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n) + ")");
}

// Union-find over a small index range.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // False if x and y were already connected.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent_[rx] = ry;
        return true;
    }

private:
    std::vector<int> parent_;
};

} // namespace

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        adj[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out; // already lexicographic by construction
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = n;
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::component_count() const {
    UnionFind uf(n);
    int comps = n;
    for (int u = 0; u < n; ++u)
        adj[u].for_each([&](int v) {
            if (u < v && uf.unite(u, v)) --comps;
        });
    return comps;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > VertexSet::kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " out of range");
    Graph g;
    g.n = n;
    g.adj.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

// --- families ---------------------------------------------------------------

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite needs at least one part");
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("multipartite part sizes must be >= 1");
        for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
        n += parts[p];
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return make_graph(n, e);
}

Graph double_star(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("double star needs r, s >= 1");
    // u_0 = 0, u_i = i (1..r), v_0 = r+1, v_j = r+1+j (1..s)
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= r; ++i) e.emplace_back(0, i);
    int v0 = r + 1;
    for (int j = 1; j <= s; ++j) e.emplace_back(v0, v0 + j);
    e.emplace_back(0, v0);
    return make_graph(r + s + 2, e);
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel needs rim length >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rim; ++i) {
        e.emplace_back(i, (i + 1) % rim);
        e.emplace_back(i, rim); // hub last
    }
    return make_graph(rim + 1, e);
}

Graph cycle_with_chord(int r, int k) {
    if (r < 1 || k < 1) throw std::invalid_argument("chorded cycle needs r, k >= 1");
    // Cycle order v=0, w_1..w_r = 1..r, u = r+1, w_{r+1}..w_{r+k} = r+2..r+k+1,
    // plus the chord uv.
    int n = r + k + 2;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    e.emplace_back(0, r + 1);
    return make_graph(n, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer pentagon
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return make_graph(10, e);
}

Graph rp2_barycentric_complement() {
    // Minimal 6-vertex triangulation of the projective plane.
    static const std::array<std::array<int, 3>, 10> tri = {{{0, 1, 4},
                                                            {0, 1, 5},
                                                            {0, 2, 3},
                                                            {0, 2, 5},
                                                            {0, 3, 4},
                                                            {1, 2, 3},
                                                            {1, 2, 4},
                                                            {1, 3, 5},
                                                            {2, 4, 5},
                                                            {3, 4, 5}}};
    // Barycentric subdivision vertices: 6 original vertices, then the 15 edges
    // in lexicographic order, then the 10 triangles in the order above.
    std::vector<std::pair<int, int>> edge_faces;
    std::set<std::pair<int, int>> eset;
    for (const auto& t : tri)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) eset.insert({t[a], t[b]});
    edge_faces.assign(eset.begin(), eset.end());

    auto edge_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edge_faces.begin(), edge_faces.end(), std::make_pair(u, v));
        return 6 + static_cast<int>(it - edge_faces.begin());
    };

    int n = 6 + static_cast<int>(edge_faces.size()) + static_cast<int>(tri.size());
    std::vector<std::pair<int, int>> skel; // 1-skeleton of the subdivision: nested face pairs
    for (std::size_t ei = 0; ei < edge_faces.size(); ++ei) {
        skel.emplace_back(edge_faces[ei].first, 6 + static_cast<int>(ei));
        skel.emplace_back(edge_faces[ei].second, 6 + static_cast<int>(ei));
    }
    for (std::size_t ti = 0; ti < tri.size(); ++ti) {
        int tv = 6 + static_cast<int>(edge_faces.size()) + static_cast<int>(ti);
        const auto& t = tri[ti];
        for (int a = 0; a < 3; ++a) skel.emplace_back(t[a], tv);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) skel.emplace_back(edge_index(t[a], t[b]), tv);
    }
    return complement(make_graph(n, skel));
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Path: return path_graph(spec.a);
        case FamilySpec::Kind::Cycle: return cycle_graph(spec.a);
        case FamilySpec::Kind::Complete: return complete_graph(spec.a);
        case FamilySpec::Kind::CompleteMultipartite: return complete_multipartite(spec.parts);
        case FamilySpec::Kind::DoubleStar: return double_star(spec.a, spec.b);
        case FamilySpec::Kind::Wheel: return wheel_graph(spec.a);
        case FamilySpec::Kind::CycleWithChord: return cycle_with_chord(spec.a, spec.b);
        case FamilySpec::Kind::Petersen: return petersen_graph();
        case FamilySpec::Kind::Rp2BarycentricComplement: return rp2_barycentric_complement();
        case FamilySpec::Kind::EdgeList: return make_graph(spec.n, spec.edges);
    }
    throw std::logic_error("unreachable");
}

// --- operations ---------------------------------------------------------------

Graph join_graphs(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.n, v + g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) e.emplace_back(u, v + g.n);
    return make_graph(g.n + h.n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.n, v + g.n);
    return make_graph(g.n + h.n, e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    auto id = [&](int i, int j) { return i * h.n + j; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.n; ++i)
        for (auto [u, v] : h.edges()) e.emplace_back(id(i, u), id(i, v));
    for (auto [u, v] : g.edges())
        for (int j = 0; j < h.n; ++j) e.emplace_back(id(u, j), id(v, j));
    return make_graph(g.n * h.n, e);
}

Graph categorical_product(const Graph& g, const Graph& h) {
    auto id = [&](int i, int j) { return i * h.n + j; };
    std::vector<std::pair<int, int>> e;
    for (auto [u1, u2] : g.edges())
        for (auto [v1, v2] : h.edges()) {
            e.emplace_back(id(u1, v1), id(u2, v2));
            e.emplace_back(id(u1, v2), id(u2, v1));
        }
    return make_graph(g.n * h.n, e);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (!g.has_edge(i, j)) e.emplace_back(i, j);
    return make_graph(g.n, e);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.to_vector();
    for (int v : verts) check_vertex(v, g.n);
    std::vector<int> newid(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) newid[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (int u : verts)
        (g.adj[u] & s).for_each([&](int v) {
            if (u < v) e.emplace_back(newid[u], newid[v]);
        });
    return make_graph(static_cast<int>(verts.size()), e);
}

Graph delete_vertex(const Graph& g, int v) {
    check_vertex(v, g.n);
    VertexSet keep = VertexSet::full(g.n);
    keep.reset(v);
    return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, int u, int v) {
    check_vertex(u, g.n);
    check_vertex(v, g.n);
    if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
    Graph out = g;
    out.adj[u].reset(v);
    out.adj[v].reset(u);
    return out;
}

bool induced_forest_check(const Graph& g, const VertexSet& s, const DegreeBound& cap) {
    if (s.highest() >= g.n) throw std::invalid_argument("vertex set exceeds graph order");
    bool ok = true;
    UnionFind uf(g.n);
    s.for_each([&](int u) {
        if (!ok) return;
        VertexSet nb = g.adj[u] & s;
        if (!cap.allows(nb.count())) {
            ok = false;
            return;
        }
        nb.for_each([&](int v) {
            if (ok && u < v && !uf.unite(u, v)) ok = false;
        });
    });
    return ok;
}

int girth(const Graph& g) {
    int best = kGirthInfinity;
    std::vector<int> dist(g.n), parent(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (2 * dist[u] >= best) continue;
            g.adj[u].for_each([&](int v) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            });
        }
    }
    return best;
}

// --- block decomposition -------------------------------------------------------

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDecomposition out;
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        g.adj[u].for_each([&](int v) {
            if (v == parent) return;
            if (disc[v] == -1) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1) out.cut_vertices.set(u);
                    VertexSet block;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.set(a);
                        block.set(b);
                        if (a == u && b == v) break;
                    }
                    out.blocks.push_back(block);
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        });
    };

    for (int v = 0; v < g.n; ++v)
        if (disc[v] == -1 && g.degree(v) > 0) dfs(v, -1);

    out.b = static_cast<int>(out.blocks.size());
    out.is_cactus = true;
    std::vector<int> saturated_count(g.n, 0);
    for (const auto& block : out.blocks) {
        int size = block.count();
        if (size == 2) {
            auto vs = block.to_vector();
            out.bridges.emplace_back(vs[0], vs[1]);
        } else {
            bool is_cycle = true;
            block.for_each([&](int v) {
                if ((g.adj[v] & block).count() != 2) is_cycle = false;
            });
            if (!is_cycle) out.is_cactus = false;
        }
        bool saturated = size > 0 && out.cut_vertices.contains(block);
        if (saturated) {
            ++out.sb;
            block.for_each([&](int v) { ++saturated_count[v]; });
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (saturated_count[v] >= 2) ++out.sv;
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

Graph random_cactus(std::uint64_t seed, int block_count, int max_cycle_len) {
    if (block_count < 1) throw std::invalid_argument("need at least one block");
    if (max_cycle_len < 3) throw std::invalid_argument("max cycle length must be >= 3");
    SplitMix64 rng(seed);
    int n = 1;
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < block_count; ++b) {
        int attach = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        bool cycle = rng.chance(2, 3);
        if (cycle) {
            int len = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_cycle_len - 2)));
            int prev = attach;
            for (int i = 0; i < len - 1; ++i) {
                e.emplace_back(prev, n);
                prev = n++;
            }
            e.emplace_back(prev, attach);
        } else {
            e.emplace_back(attach, n);
            ++n;
        }
    }
    return make_graph(n, e);
}

Graph random_graph(std::uint64_t seed, int n, std::uint64_t p_num, std::uint64_t p_den) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p_num, p_den)) e.emplace_back(i, j);
    return make_graph(n, e);
}

// --- serialization --------------------------------------------------------------

std::string graph_to_json(const Graph& g, const std::string& meta_rng, std::uint64_t seed) {
    nlohmann::json j;
    j["n"] = g.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (!meta_rng.empty()) j["meta"] = {{"rng", meta_rng}, {"seed", seed}};
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_graph(n, edges);
}

std::string graph_to_edge_text(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.n << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph graph_from_edge_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int n = 0;
    if (!(is >> tag >> n) || tag != "n")
        throw std::invalid_argument("edge-list text must start with a 'n <count>' header");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (is >> u >> v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

} // namespace fcx

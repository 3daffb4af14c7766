#ifndef FCX_GRAPH_HPP
#define FCX_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcx/bitset.hpp"
#include "fcx/degree_bound.hpp"

namespace fcx {

// Simple undirected graph on vertices 0..n-1 with dense adjacency bitsets.
// Immutable after construction: adjacency symmetric, loop-free, all bits < n.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    int degree(int v) const { return adj[v].count(); }
    bool has_edge(int u, int v) const { return adj[u].test(v); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj) twice += row.count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const;  // lexicographically sorted, u < v
    int max_degree() const;
    int min_degree() const;
    int component_count() const;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// --- family generators ---------------------------------------------------

struct FamilySpec {
    enum class Kind {
        Path,                     // n >= 1
        Cycle,                    // n >= 3
        Complete,                 // n >= 1
        CompleteMultipartite,     // part sizes >= 1
        DoubleStar,               // r, s >= 1
        Wheel,                    // rim length n >= 3, hub is the last vertex
        CycleWithChord,           // r, k >= 1; n = r + k + 2
        Petersen,
        Rp2BarycentricComplement, // 31 vertices
        EdgeList,                 // explicit
    };

    Kind kind = Kind::Path;
    int a = 0, b = 0;                       // scalar parameters
    std::vector<int> parts;                 // multipartite sizes
    int n = 0;                              // EdgeList vertex count
    std::vector<std::pair<int, int>> edges; // EdgeList edges

    static FamilySpec make(Kind k, int a = 0, int b = 0) {
        FamilySpec f;
        f.kind = k;
        f.a = a;
        f.b = b;
        return f;
    }
    static FamilySpec path(int n) { return make(Kind::Path, n); }
    static FamilySpec cycle(int n) { return make(Kind::Cycle, n); }
    static FamilySpec complete(int n) { return make(Kind::Complete, n); }
    static FamilySpec multipartite(std::vector<int> sizes) {
        FamilySpec f = make(Kind::CompleteMultipartite);
        f.parts = std::move(sizes);
        return f;
    }
    static FamilySpec double_star(int r, int s) { return make(Kind::DoubleStar, r, s); }
    static FamilySpec wheel(int n) { return make(Kind::Wheel, n); }
    static FamilySpec cycle_with_chord(int r, int k) { return make(Kind::CycleWithChord, r, k); }
    static FamilySpec petersen() { return make(Kind::Petersen); }
    static FamilySpec rp2_barycentric_complement() {
        return make(Kind::Rp2BarycentricComplement);
    }
    static FamilySpec from_edges(int n, std::vector<std::pair<int, int>> edges) {
        FamilySpec f = make(Kind::EdgeList);
        f.n = n;
        f.edges = std::move(edges);
        return f;
    }
};

Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph double_star(int r, int s);
Graph wheel_graph(int rim);  // rim vertices 0..rim-1, hub = rim
Graph cycle_with_chord(int r, int k);
Graph petersen_graph();
Graph rp2_barycentric_complement();

// --- operations -----------------------------------------------------------

Graph join_graphs(const Graph& g, const Graph& h);    // h relabeled by +g.n, all cross edges
Graph disjoint_union(const Graph& g, const Graph& h); // h relabeled by +g.n
Graph cartesian_product(const Graph& g, const Graph& h);   // (i,j) -> i*h.n + j
Graph categorical_product(const Graph& g, const Graph& h); // (i,j) -> i*h.n + j
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& s); // order-preserving relabel
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

// True iff G[s] is acyclic and (cap unbounded or max degree of G[s] <= cap).
// Acyclicity by union-find over the induced edges.
bool induced_forest_check(const Graph& g, const VertexSet& s, const DegreeBound& cap);

// Length of a shortest cycle; kGirthInfinity for forests.
inline constexpr int kGirthInfinity = std::numeric_limits<int>::max();
int girth(const Graph& g);

// --- structure ------------------------------------------------------------

struct BlockDecomposition {
    std::vector<VertexSet> blocks;            // 2-connected blocks and bridge edges
    VertexSet cut_vertices;
    std::vector<std::pair<int, int>> bridges; // edges that are their own block
    int b = 0;                                // block count
    int sb = 0;                               // blocks with all vertices cut vertices
    int sv = 0;                               // vertices in >= 2 saturated blocks
    bool is_cactus = false;                   // every block a cycle or a single edge
};

BlockDecomposition block_decomposition(const Graph& g);

// Connected cactus built by attaching seeded random cycle/edge blocks at
// random existing vertices. Deterministic for a fixed seed (splitmix64-v1).
Graph random_cactus(std::uint64_t seed, int block_count, int max_cycle_len);

// G(n, p) with p = p_num/p_den, seeded, deterministic (splitmix64-v1).
Graph random_graph(std::uint64_t seed, int n, std::uint64_t p_num = 1, std::uint64_t p_den = 2);

// --- serialization ----------------------------------------------------------

// {"n": int, "edges": [[u, v], ...]} with edges sorted lexicographically.
// An optional "meta" object carries rng algorithm/seed for generated inputs.
std::string graph_to_json(const Graph& g, const std::string& meta_rng = "",
                          std::uint64_t seed = 0);
Graph graph_from_json(const std::string& text);

// Header "n <count>" then one "u v" line per edge.
std::string graph_to_edge_text(const Graph& g);
Graph graph_from_edge_text(const std::string& text);

} // namespace fcx

#endif // FCX_GRAPH_HPP

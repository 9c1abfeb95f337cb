#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace evenfactor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs);
    static VertexSet from_mask(VertexMask mask);

    const std::vector<Vertex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    // Throws std::invalid_argument if a member is outside 0..n-1.
    VertexMask mask(int n) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1, n <= kMaxOrder.
//
// Stores sorted neighbor lists together with a neighbor bitmask per vertex
// so that adjacency tests are O(1).
class Graph {
public:
    Graph() = default;
    // n isolated vertices.
    explicit Graph(int n);
    // Rejects self-loops, repeated edges and out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);
    // Symmetric masks without the diagonal bit; validated.
    static Graph from_masks(std::vector<VertexMask> masks);

    int order() const { return static_cast<int>(masks_.size()); }
    int size() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
    VertexMask neighbor_mask(Vertex v) const { return masks_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return (masks_[u] >> v) & 1U; }
    // All edges (u, v) with u < v, ordered by (u, v).
    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;
    VertexMask all_vertices() const;

    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.masks_ == b.masks_; }

private:
    void rebuild();

    std::vector<VertexMask> masks_;
    std::vector<std::vector<Vertex>> neighbors_;
    int edge_count_ = 0;
};

struct ComponentReport {
    std::vector<VertexSet> components;
    int odd_count = 0;
};

// Induced subgraph G - S; original[i] is the label in G of vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

/// Constructors. Labels: union and join place g1's vertices first, then g2's
/// shifted by g1.order().
Graph empty_graph(int n);
Graph complete(int k);
Graph cycle(int k);
Graph path(int k);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph disjoint_union(std::span<const Graph> parts);
Graph join(const Graph& g1, const Graph& g2);
// Copies of a graph repeated `copies` times (e.g. (t-1)K_p).
Graph repeat(const Graph& g, int copies);

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);
ComponentReport components(const Graph& g, const VertexSet& s = {});
// Connected components of the subgraph induced by `alive`, as masks.
std::vector<VertexMask> component_masks(const Graph& g, VertexMask alive);

int min_degree(const Graph& g);
bool is_connected(const Graph& g);
// Edges whose removal keeps a connected graph connected.
std::vector<Edge> non_bridge_edges(const Graph& g);
std::vector<Edge> non_edges(const Graph& g);
// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace evenfactor

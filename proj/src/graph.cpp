#include "evenfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace evenfactor {

namespace {

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

void check_order(int n) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxOrder));
    }
}

void check_vertex(int n, Vertex v) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n));
    }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(VertexMask mask) {
    std::vector<Vertex> vs;
    vs.reserve(std::popcount(mask));
    while (mask) {
        vs.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    VertexSet out;
    out.members_ = std::move(vs);
    return out;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexMask VertexSet::mask(int n) const {
    VertexMask m = 0;
    for (Vertex v : members_) {
        check_vertex(n, v);
        m |= bit(v);
    }
    return m;
}

Graph::Graph(int n) {
    check_order(n);
    masks_.assign(n, 0);
    rebuild();
}

Graph::Graph(int n, std::span<const Edge> edges) {
    check_order(n);
    masks_.assign(n, 0);
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (masks_[u] & bit(v)) {
            throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        masks_[u] |= bit(v);
        masks_[v] |= bit(u);
    }
    rebuild();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_masks(std::vector<VertexMask> masks) {
    const int n = static_cast<int>(masks.size());
    check_order(n);
    for (int v = 0; v < n; ++v) {
        if (masks[v] & ~low_mask(n)) throw std::invalid_argument("neighbor mask out of range");
        if (masks[v] & bit(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        for (VertexMask m = masks[v]; m; m &= m - 1) {
            if (!(masks[std::countr_zero(m)] & bit(v))) throw std::invalid_argument("asymmetric adjacency");
        }
    }
    Graph g;
    g.masks_ = std::move(masks);
    g.rebuild();
    return g;
}

void Graph::rebuild() {
    const int n = order();
    neighbors_.assign(n, {});
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        neighbors_[v] = VertexSet::from_mask(masks_[v]).members();
        degree_sum += static_cast<int>(neighbors_[v].size());
    }
    edge_count_ = degree_sum / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u) {
        for (Vertex v : neighbors_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(order());
    for (int v = 0; v < order(); ++v) d[v] = degree(v);
    return d;
}

VertexMask Graph::all_vertices() const { return low_mask(order()); }

Graph Graph::with_edge(Vertex u, Vertex v) const {
    check_vertex(order(), u);
    check_vertex(order(), v);
    if (u == v || adjacent(u, v)) throw std::invalid_argument("with_edge: not a non-edge");
    auto masks = masks_;
    masks[u] |= bit(v);
    masks[v] |= bit(u);
    return from_masks(std::move(masks));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    check_vertex(order(), u);
    check_vertex(order(), v);
    if (!adjacent(u, v)) throw std::invalid_argument("without_edge: not an edge");
    auto masks = masks_;
    masks[u] &= ~bit(v);
    masks[v] &= ~bit(u);
    return from_masks(std::move(masks));
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int k) {
    check_order(k);
    std::vector<VertexMask> masks(k);
    for (int v = 0; v < k; ++v) masks[v] = low_mask(k) & ~bit(v);
    return Graph::from_masks(std::move(masks));
}

Graph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph(k, e);
}

Graph path(int k) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, e);
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n = n1 + g2.order();
    check_order(n);
    std::vector<VertexMask> masks(n);
    for (int v = 0; v < n1; ++v) masks[v] = g1.neighbor_mask(v);
    for (int v = 0; v < g2.order(); ++v) masks[n1 + v] = g2.neighbor_mask(v) << n1;
    return Graph::from_masks(std::move(masks));
}

Graph disjoint_union(std::span<const Graph> parts) {
    Graph out;
    for (const Graph& g : parts) out = disjoint_union(out, g);
    return out;
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    check_order(n1 + n2);
    std::vector<VertexMask> masks(n1 + n2);
    const VertexMask side2 = low_mask(n2) << n1;
    const VertexMask side1 = low_mask(n1);
    for (int v = 0; v < n1; ++v) masks[v] = g1.neighbor_mask(v) | side2;
    for (int v = 0; v < n2; ++v) masks[n1 + v] = (g2.neighbor_mask(v) << n1) | side1;
    return Graph::from_masks(std::move(masks));
}

Graph repeat(const Graph& g, int copies) {
    if (copies < 0) throw std::invalid_argument("negative copy count");
    Graph out;
    for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    const VertexMask removed = s.mask(g.order());
    InducedSubgraph out;
    std::vector<int> index(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (!(removed & bit(v))) {
            index[v] = static_cast<int>(out.original.size());
            out.original.push_back(v);
        }
    }
    std::vector<VertexMask> masks(out.original.size(), 0);
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        for (Vertex w : g.neighbors(out.original[i])) {
            if (index[w] >= 0) masks[i] |= bit(index[w]);
        }
    }
    out.graph = Graph::from_masks(std::move(masks));
    return out;
}

std::vector<VertexMask> component_masks(const Graph& g, VertexMask alive) {
    std::vector<VertexMask> out;
    VertexMask unseen = alive & g.all_vertices();
    while (unseen) {
        VertexMask comp = unseen & (~unseen + 1);
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
            next &= alive & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

ComponentReport components(const Graph& g, const VertexSet& s) {
    const VertexMask alive = g.all_vertices() & ~s.mask(g.order());
    ComponentReport report;
    for (VertexMask c : component_masks(g, alive)) {
        report.components.push_back(VertexSet::from_mask(c));
        if (std::popcount(c) % 2 == 1) ++report.odd_count;
    }
    return report;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || component_masks(g, g.all_vertices()).size() == 1;
}

std::vector<Edge> non_bridge_edges(const Graph& g) {
    std::vector<Edge> out;
    const std::size_t base = component_masks(g, g.all_vertices()).size();
    for (const Edge& e : g.edges()) {
        Graph h = g.without_edge(e.first, e.second);
        if (component_masks(h, h.all_vertices()).size() == base) out.push_back(e);
    }
    return out;
}

std::vector<Edge> non_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
    VertexMask seen = 0;
    for (Vertex p : perm) {
        check_vertex(g.order(), p);
        if (seen & bit(p)) throw std::invalid_argument("not a permutation");
        seen |= bit(p);
    }
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), e);
}

}  // namespace evenfactor

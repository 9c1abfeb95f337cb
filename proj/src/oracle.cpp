#include "evenfactor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace evenfactor {

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneExists: return "none";
        case SearchStatus::SearchCapExceeded: return "cap-exceeded";
    }
    return "unknown";
}

bool is_even_factor(const Graph& g, std::span<const Edge> edges) {
    std::vector<int> degree(g.order(), 0);
    std::vector<VertexMask> used(g.order(), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
        }
        if ((used[u] >> v) & 1U) throw std::invalid_argument("repeated edge in factor");
        used[u] |= VertexMask{1} << v;
        used[v] |= VertexMask{1} << u;
        ++degree[u];
        ++degree[v];
    }
    return std::all_of(degree.begin(), degree.end(), [](int d) { return d >= 2 && d % 2 == 0; });
}

namespace {

// Per-vertex state is (chosen degree, open incident edges). Propagation:
//  - no open edges: chosen degree must be even and >= 2;
//  - chosen 0: needs >= 2 open edges, and takes both when exactly 2 remain;
//  - chosen odd with one open edge: that edge is taken;
//  - chosen even >= 2 with one open edge: that edge is dropped.
// After propagation each component of the open-edge graph must hold an even
// number of odd-degree vertices (a parity fix is a T-join). Branching picks the
// unsatisfied vertex with fewest open edges and tries "take" before "drop".
class FactorSearch {
public:
    FactorSearch(const Graph& g, long long cap) : g_(g), cap_(cap), edges_(g.edges()) {
        incident_.assign(g.order(), {});
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            incident_[edges_[e].first].push_back(e);
            incident_[edges_[e].second].push_back(e);
        }
        state_.assign(edges_.size(), kOpen);
        chosen_.assign(g.order(), 0);
        open_.resize(g.order());
        for (int v = 0; v < g.order(); ++v) open_[v] = static_cast<int>(incident_[v].size());
    }

    EvenFactorCertificate run() {
        EvenFactorCertificate cert;
        std::vector<int> all(g_.order());
        std::iota(all.begin(), all.end(), 0);
        if (propagate(all) && parity_ok()) {
            const int result = dfs();
            if (result > 0) {
                cert.status = SearchStatus::Found;
                for (std::size_t e = 0; e < edges_.size(); ++e) {
                    if (solution_[e] == kIn) cert.edges.push_back(edges_[e]);
                }
            } else {
                cert.status = result == 0 ? SearchStatus::NoneExists : SearchStatus::SearchCapExceeded;
            }
        } else {
            cert.status = SearchStatus::NoneExists;
        }
        cert.nodes_explored = nodes_;
        return cert;
    }

private:
    static constexpr std::int8_t kOpen = 0;
    static constexpr std::int8_t kIn = 1;
    static constexpr std::int8_t kOut = 2;

    void assign(int e, std::int8_t value, std::vector<int>& touched) {
        state_[e] = value;
        trail_.push_back(e);
        auto [u, v] = edges_[e];
        --open_[u];
        --open_[v];
        if (value == kIn) {
            ++chosen_[u];
            ++chosen_[v];
        }
        touched.push_back(u);
        touched.push_back(v);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const int e = trail_.back();
            trail_.pop_back();
            auto [u, v] = edges_[e];
            ++open_[u];
            ++open_[v];
            if (state_[e] == kIn) {
                --chosen_[u];
                --chosen_[v];
            }
            state_[e] = kOpen;
        }
    }

    bool propagate(std::vector<int> queue) {
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            const int c = chosen_[v];
            const int o = open_[v];
            if (o == 0) {
                if (c == 0 || c % 2 == 1) return false;
                continue;
            }
            std::int8_t forced = kOpen;
            if (c == 0) {
                if (o < 2) return false;
                if (o == 2) forced = kIn;
            } else if (o == 1) {
                forced = c % 2 == 1 ? kIn : kOut;
            }
            if (forced == kOpen) continue;
            for (int e : incident_[v]) {
                if (state_[e] == kOpen) assign(e, forced, queue);
            }
        }
        return true;
    }

    int find(std::vector<int>& parent, int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    bool parity_ok() {
        std::vector<int> parent(g_.order());
        std::iota(parent.begin(), parent.end(), 0);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (state_[e] != kOpen) continue;
            const int a = find(parent, edges_[e].first);
            const int b = find(parent, edges_[e].second);
            if (a != b) parent[a] = b;
        }
        std::vector<int> odd(g_.order(), 0);
        for (int v = 0; v < g_.order(); ++v) {
            if (chosen_[v] % 2 == 1) odd[find(parent, v)] ^= 1;
        }
        return std::none_of(odd.begin(), odd.end(), [](int x) { return x != 0; });
    }

    // 1 found, 0 exhausted, -1 cap hit.
    int dfs() {
        if (++nodes_ > cap_) return -1;
        int pick = -1;
        for (int v = 0; v < g_.order(); ++v) {
            const bool satisfied = chosen_[v] > 0 && chosen_[v] % 2 == 0;
            if (open_[v] > 0 && !satisfied && (pick < 0 || open_[v] < open_[pick])) pick = v;
        }
        if (pick < 0) {
            // Every vertex is even and nonzero already; drop all open edges.
            solution_ = state_;
            return 1;
        }
        int branch = -1;
        for (int e : incident_[pick]) {
            if (state_[e] != kOpen) continue;
            const int w = edges_[e].first == pick ? edges_[e].second : edges_[e].first;
            const bool needy = chosen_[w] == 0 || chosen_[w] % 2 == 1;
            if (branch < 0 || needy) {
                branch = e;
                if (needy) break;
            }
        }
        for (std::int8_t value : {kIn, kOut}) {
            const std::size_t mark = trail_.size();
            std::vector<int> touched;
            assign(branch, value, touched);
            if (propagate(std::move(touched)) && parity_ok()) {
                const int r = dfs();
                if (r != 0) return r;
            }
            undo_to(mark);
        }
        return 0;
    }

    const Graph& g_;
    long long cap_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::int8_t> state_;
    std::vector<std::int8_t> solution_;
    std::vector<int> chosen_;
    std::vector<int> open_;
    std::vector<int> trail_;
    long long nodes_ = 0;
};

}  // namespace

EvenFactorCertificate find_even_factor(const Graph& g, const OracleOptions& options) {
    if (g.order() == 0) return {SearchStatus::Found, {}, 0};
    if (min_degree(g) < 2) return {SearchStatus::NoneExists, {}, 0};
    return FactorSearch(g, options.node_cap).run();
}

int odd_components(const Graph& g, VertexMask removed) {
    int odd = 0;
    for (VertexMask c : component_masks(g, g.all_vertices() & ~removed)) odd += std::popcount(c) & 1;
    return odd;
}

YanKanoReport yan_kano(const Graph& g) {
    const int n = g.order();
    if (n > 63) throw std::invalid_argument("yan_kano supports at most 63 vertices");
    YanKanoReport report;
    for (int k = 2; 2 * k <= n; ++k) {
        const VertexMask limit = VertexMask{1} << n;
        for (VertexMask s = (VertexMask{1} << k) - 1; s < limit;) {
            ++report.subsets_checked;
            if (odd_components(g, s) >= k) {
                report.holds = false;
                report.witness = VertexSet::from_mask(s);
                return report;
            }
            // Next k-subset in colexicographic order (Gosper).
            const VertexMask low = s & (~s + 1);
            const VertexMask ripple = s + low;
            if (ripple == 0) break;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }
    return report;
}

}  // namespace evenfactor

#include "evenfactor/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "evenfactor/graph6.hpp"
#include "evenfactor/quotient.hpp"
#include "evenfactor/sampler.hpp"
#include "evenfactor/spectral.hpp"
#include "evenfactor/theorem.hpp"

namespace evenfactor {

namespace {

LemmaCheck strict(std::string lemma, std::string point, double margin) {
    return {std::move(lemma), std::move(point), margin, margin > kStrictMargin};
}

std::string parts_text(const std::vector<int>& parts) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
    out << ")";
    return out.str();
}

// Connected G(n, p) draw with p in [0.2, 0.9) satisfying `accept`.
Graph draw_connected(std::mt19937_64& rng, int n, const std::function<bool(const Graph&)>& accept) {
    for (;;) {
        const double p = 0.2 + 0.7 * unit_uniform(rng);
        Graph g = random_graph(rng, n, p);
        if (is_connected(g) && accept(g)) return g;
    }
}

// Every nonincreasing sequence of exactly `parts` positive integers summing to `total`.
void for_each_partition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    std::function<void(int, int)> recurse = [&](int remaining, int cap) {
        const int left = parts - static_cast<int>(current.size());
        if (left == 0) {
            if (remaining == 0) visit(current);
            return;
        }
        for (int v = std::min(cap, remaining - (left - 1)); v >= 1; --v) {
            if (v * left < remaining) break;
            current.push_back(v);
            recurse(remaining - v, v);
            current.pop_back();
        }
    };
    recurse(total, total);
}

}  // namespace

std::vector<LemmaCheck> check_signless_edge_addition(std::uint64_t seed, int count, int n_lo, int n_hi) {
    std::mt19937_64 rng(seed);
    std::vector<LemmaCheck> out;
    for (int i = 0; i < count; ++i) {
        const int n = uniform_int(rng, n_lo, n_hi);
        const Graph g = draw_connected(rng, n, [](const Graph& h) { return !non_edges(h).empty(); });
        const auto candidates = non_edges(g);
        const Edge e = candidates[uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
        const double margin = rho_q(g.with_edge(e.first, e.second)) - rho_q(g);
        out.push_back(strict("signless-edge-addition",
                             to_graph6(g) + " +" + std::to_string(e.first) + "-" + std::to_string(e.second), margin));
    }
    return out;
}

std::vector<LemmaCheck> check_distance_edge_deletion(std::uint64_t seed, int count, int n_lo, int n_hi) {
    std::mt19937_64 rng(seed);
    std::vector<LemmaCheck> out;
    for (int i = 0; i < count; ++i) {
        const int n = uniform_int(rng, n_lo, n_hi);
        const Graph g = draw_connected(rng, n, [](const Graph& h) { return !non_bridge_edges(h).empty(); });
        const auto candidates = non_bridge_edges(g);
        const Edge e = candidates[uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
        const double margin = rho_d(g.without_edge(e.first, e.second)) - rho_d(g);
        out.push_back(strict("distance-edge-deletion",
                             to_graph6(g) + " -" + std::to_string(e.first) + "-" + std::to_string(e.second), margin));
    }
    return out;
}

std::vector<LemmaCheck> check_clique_join_parts(int n_max, int s_max, int t_max) {
    std::vector<LemmaCheck> out;
    for (int n = 3; n <= n_max; ++n) {
        for (int s = 1; s <= s_max; ++s) {
            for (int t = 2; t <= t_max; ++t) {
                if (n - s < t) continue;
                for_each_partition(n - s, t, [&](const std::vector<int>& parts) {
                    for (int p = 1; p <= parts.back(); ++p) {
                        const int big = n - s - p * (t - 1);
                        if (!(parts.front() < big)) continue;
                        std::vector<int> target{big};
                        target.insert(target.end(), t - 1, p);
                        const Graph lhs = clique_join(s, parts);
                        const Graph rhs = clique_join(s, target);
                        std::ostringstream point;
                        point << "n=" << n << " s=" << s << " t=" << t << " p=" << p << " parts=" << parts_text(parts);
                        out.push_back(strict("signless-clique-join", point.str(), rho_q(rhs) - rho_q(lhs)));
                        out.push_back(strict("distance-clique-join", point.str(), rho_d(lhs) - rho_d(rhs)));
                    }
                });
            }
        }
    }
    return out;
}

std::vector<LemmaCheck> check_equitable_quotients(int n_max, int delta_max, double tolerance) {
    std::vector<LemmaCheck> out;
    auto check = [&](QuotientFamily family, int n, int s, int delta) {
        const Graph g = quotient_family_graph(family, n, s, delta);
        const Partition part = quotient_family_partition(family, n, s, delta);
        const bool signless = family == QuotientFamily::SignlessExtremal ||
                              family == QuotientFamily::SignlessSingletons ||
                              family == QuotientFamily::SignlessEqualParts;
        const SymMatrix m = signless ? signless_laplacian(g) : distance_matrix(g);
        const QuotientMatrix q = quotient_matrix(m, part);
        std::ostringstream point;
        point << to_string(family) << " n=" << n << " s=" << s << " d=" << delta;
        double margin = -1.0;
        if (q.equitable() && q == family_quotient_template(family, n, s, delta)) {
            const double root = largest_real_root(family_cubic(family, n, s, delta), 1e-12);
            margin = tolerance - std::abs(root - largest_eigenvalue(m).value);
        } else {
            point << " quotient mismatch";
        }
        out.push_back({"equitable-quotient", point.str(), margin, margin >= 0.0});
    };
    for (int n = 4; n <= n_max; ++n) {
        for (int delta = 2; delta <= delta_max; ++delta) {
            if (n >= 2 * delta) {
                check(QuotientFamily::SignlessExtremal, n, 0, delta);
                check(QuotientFamily::DistanceExtremal, n, 0, delta);
            }
            const int s = delta;  // singletons families depend on s only
            if (n >= 2 * s) {
                check(QuotientFamily::SignlessSingletons, n, s, delta);
                check(QuotientFamily::DistanceSingletons, n, s, delta);
            }
            for (int k = 2; k <= delta - 1; ++k) {
                if (n - k - (delta + 1 - k) * (k - 1) < 1) continue;
                check(QuotientFamily::SignlessEqualParts, n, k, delta);
                check(QuotientFamily::DistanceEqualParts, n, k, delta);
            }
        }
    }
    return out;
}

std::vector<LemmaCheck> check_distance_rayleigh(std::span<const Graph> graphs, double tolerance) {
    std::vector<LemmaCheck> out;
    for (const Graph& g : graphs) {
        if (g.order() == 0 || !is_connected(g)) continue;
        const double bound = 2.0 * static_cast<double>(wiener_index(g)) / g.order();
        const double margin = rho_d(g) - bound;
        out.push_back({"distance-rayleigh", to_graph6(g), margin, margin >= -tolerance});
    }
    return out;
}

std::vector<LemmaCheck> check_extremal_bracket(int delta_lo, int delta_hi, int n_max) {
    std::vector<LemmaCheck> out;
    for (int delta = delta_lo; delta <= delta_hi; ++delta) {
        for (int n = 2 * delta; n <= n_max; ++n) {
            if (n % 2 != 0 || n < 7 * delta - 7) continue;
            const double thr = threshold_rho_q({n, delta});
            const double margin = std::min(thr - (2.0 * n - 2.0 * delta), (2.0 * n - delta) - thr);
            out.push_back(strict("signless-extremal-bracket", "n=" + std::to_string(n) + " d=" + std::to_string(delta), margin));
        }
    }
    return out;
}

Graph relabeled_equal_parts_s2(int n, int delta) {
    const Graph star = extremal_graph({n, delta});
    std::vector<VertexMask> masks(n);
    for (int v = 0; v < n; ++v) masks[v] = star.neighbor_mask(v);
    const int first_isolated = n - delta + 1;
    for (int u = first_isolated; u < n; ++u) {
        for (int v = first_isolated; v < n; ++v) {
            if (u != v) masks[u] |= VertexMask{1} << v;
        }
        for (int j = 2; j < delta; ++j) {
            masks[u] &= ~(VertexMask{1} << j);
            masks[j] &= ~(VertexMask{1} << u);
        }
    }
    return Graph::from_masks(std::move(masks));
}

std::vector<LemmaCheck> check_distance_perron_gap(int delta_lo, int delta_hi, int n_max, double tolerance) {
    std::vector<LemmaCheck> out;
    for (int delta = std::max(3, delta_lo); delta <= delta_hi; ++delta) {
        for (int n = 8 * delta - 7; n <= n_max; ++n) {
            if (n % 2 != 0) continue;
            const Graph star = extremal_graph({n, delta});
            const Graph g3 = relabeled_equal_parts_s2(n, delta);
            const SymMatrix d_star = distance_matrix(star);
            const SymMatrix d_g3 = distance_matrix(g3);
            const PerronResult perron = largest_eigenvalue(d_star);
            const std::vector<double>& x = perron.vector;
            double form = 0.0;
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) form += x[u] * (d_g3(u, v) - d_star(u, v)) * x[v];
            }
            const double iso = x[n - 1];
            const double hub = x[0];
            const double closed = (delta - 1.0) * (delta - 2.0) * iso * (2.0 * hub - iso);
            const double gap = largest_eigenvalue(d_g3).value - perron.value;
            const double margin = gap - form;
            const bool ok = margin >= -tolerance && std::abs(form - closed) <= 1e-9 && closed > 0.0;
            std::ostringstream point;
            point << "n=" << n << " d=" << delta << " gap=" << gap << " form=" << form << " closed=" << closed;
            out.push_back({"distance-perron-gap", point.str(), margin, ok});
        }
    }
    return out;
}

std::vector<LemmaCheck> lemma_suite(const LemmaGrid& grid) {
    std::vector<LemmaCheck> out;
    auto append = [&out](std::vector<LemmaCheck> more) { out.insert(out.end(), more.begin(), more.end()); };
    append(check_signless_edge_addition(grid.seed, grid.random_count, grid.random_n_lo, grid.random_n_hi));
    append(check_distance_edge_deletion(grid.seed + 1, grid.random_count, grid.random_n_lo, grid.random_n_hi));
    append(check_clique_join_parts(grid.clique_join_n_max));
    append(check_equitable_quotients(grid.quotient_n_max, grid.delta_hi));
    append(check_distance_rayleigh(grid.corpus));
    append(check_extremal_bracket(grid.delta_lo, grid.delta_hi, grid.extremal_n_max));
    append(check_distance_perron_gap(grid.delta_lo, grid.delta_hi, grid.extremal_n_max));
    return out;
}

}  // namespace evenfactor

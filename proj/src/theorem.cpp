#include "evenfactor/theorem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>

#include "evenfactor/errors.hpp"

namespace evenfactor {

namespace {

int equal_parts_clique(int n, int s, int delta) { return n - s - (delta + 1 - s) * (s - 1); }

Graph cliques(const std::vector<int>& parts) {
    Graph out;
    for (int p : parts) out = disjoint_union(out, complete(p));
    return out;
}

// Threshold memo shared by all callers.
class ThresholdCache {
public:
    template <typename F>
    double get(Theorem t, int n, int delta, F compute) {
        const auto key = std::make_tuple(static_cast<int>(t), n, delta);
        {
            std::lock_guard lock(mutex_);
            if (auto it = values_.find(key); it != values_.end()) return it->second;
        }
        const double v = compute();
        std::lock_guard lock(mutex_);
        values_.emplace(key, v);
        return v;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, double> values_;
};

ThresholdCache& cache() {
    static ThresholdCache c;
    return c;
}

double checked_largest_root(const Cubic& c, Bracket bracket, double widen_limit) {
    const double root = largest_root(c, bracket, {1e-12, widen_limit});
    const double top = largest_real_root(c, 1e-12);
    if (std::abs(root - top) > 1e-9 * (1.0 + std::abs(top))) {
        throw BracketError("bracketed root " + std::to_string(root) + " is not the largest root " +
                           std::to_string(top));
    }
    return root;
}

}  // namespace

void ExtremalParams::validate() const {
    if (delta < 2) throw ParameterError("extremal graph needs delta >= 2");
    if (n - 2 * delta + 1 < 1) throw ParameterError("extremal graph needs n >= 2 delta");
    if (n > kMaxOrder) throw ParameterError("extremal graph order exceeds " + std::to_string(kMaxOrder));
}

Graph clique_join(int s, const std::vector<int>& parts) {
    if (s < 0) throw ParameterError("negative join size");
    for (int p : parts) {
        if (p < 1) throw ParameterError("clique parts must be positive");
    }
    return join(complete(s), cliques(parts));
}

Graph extremal_graph(const ExtremalParams& p) {
    p.validate();
    return join(complete(p.delta), disjoint_union(complete(p.n - 2 * p.delta + 1), empty_graph(p.delta - 1)));
}

Graph family_graph(const FamilyParams& f, JoinFamily which) {
    switch (which) {
        case JoinFamily::Parts: {
            if (f.s < 1) throw ParameterError("join size s must be >= 1");
            if (!std::is_sorted(f.parts.rbegin(), f.parts.rend())) throw ParameterError("parts must be nonincreasing");
            int sum = 0;
            for (int p : f.parts) {
                if (p < 1 || p % 2 == 0) throw ParameterError("parts must be positive odd integers");
                sum += p;
            }
            if (static_cast<int>(f.parts.size()) != f.s) throw ParameterError("need exactly s parts");
            if (sum != f.n - f.s) throw ParameterError("parts must sum to n - s");
            return clique_join(f.s, f.parts);
        }
        case JoinFamily::Singletons:
            if (f.s < 1 || f.n < 2 * f.s) throw ParameterError("singletons family needs 1 <= s and n >= 2 s");
            return join(complete(f.s), disjoint_union(complete(f.n - 2 * f.s + 1), empty_graph(f.s - 1)));
        case JoinFamily::EqualParts: {
            if (f.s < 2 || f.s > f.delta - 1) throw ParameterError("equal-parts family needs 2 <= s <= delta - 1");
            const int part = f.delta + 1 - f.s;
            if (!f.parts.empty() && f.parts.back() < part) {
                throw ParameterError("equal-parts family needs the smallest part >= delta + 1 - s");
            }
            const int big = equal_parts_clique(f.n, f.s, f.delta);
            if (big < 1) throw ParameterError("equal-parts family needs n >= s + (delta + 1 - s)(s - 1) + 1");
            return join(complete(f.s), disjoint_union(complete(big), repeat(complete(part), f.s - 1)));
        }
    }
    throw std::logic_error("unhandled join family");
}

Graph quotient_family_graph(QuotientFamily family, int n, int s, int delta) {
    check_family_params(family, n, s, delta);
    switch (family) {
        case QuotientFamily::SignlessExtremal:
        case QuotientFamily::DistanceExtremal:
            return join(complete(delta), disjoint_union(complete(n - 2 * delta + 1), empty_graph(delta - 1)));
        case QuotientFamily::SignlessSingletons:
        case QuotientFamily::DistanceSingletons:
            return family_graph({n, s, delta, {}}, JoinFamily::Singletons);
        case QuotientFamily::SignlessEqualParts:
        case QuotientFamily::DistanceEqualParts:
            return family_graph({n, s, delta, {}}, JoinFamily::EqualParts);
    }
    throw std::logic_error("unhandled quotient family");
}

Partition quotient_family_partition(QuotientFamily family, int n, int s, int delta) {
    check_family_params(family, n, s, delta);
    int join_size = s;
    int big = 0;
    switch (family) {
        case QuotientFamily::SignlessExtremal:
        case QuotientFamily::DistanceExtremal:
            join_size = delta;
            big = n - 2 * delta + 1;
            break;
        case QuotientFamily::SignlessSingletons:
        case QuotientFamily::DistanceSingletons:
            big = n - 2 * s + 1;
            break;
        case QuotientFamily::SignlessEqualParts:
        case QuotientFamily::DistanceEqualParts:
            big = equal_parts_clique(n, s, delta);
            break;
    }
    auto range = [](int from, int to) {
        std::vector<Vertex> vs;
        for (int v = from; v < to; ++v) vs.push_back(v);
        return VertexSet(std::move(vs));
    };
    const VertexSet join_block = range(0, join_size);
    const VertexSet clique_block = range(join_size, join_size + big);
    const VertexSet rest = range(join_size + big, n);
    const bool signless = family == QuotientFamily::SignlessExtremal || family == QuotientFamily::SignlessSingletons ||
                          family == QuotientFamily::SignlessEqualParts;
    if (rest.empty()) throw ParameterError("family has an empty third block");
    return signless ? Partition({join_block, clique_block, rest}) : Partition({clique_block, join_block, rest});
}

double threshold_rho_q(const ExtremalParams& p) {
    p.validate();
    return cache().get(Theorem::SignlessLaplacian, p.n, p.delta, [&] {
        const Cubic c = family_cubic(QuotientFamily::SignlessExtremal, p.n, 0, p.delta);
        const double lo = 2.0 * p.n - 2.0 * p.delta;
        // Above 7 delta - 7 the root is known to lie below 2n - delta.
        const double hi = p.n >= 7 * p.delta - 7 ? 2.0 * p.n - p.delta : 2.0 * p.n;
        return checked_largest_root(c, {lo, hi}, 4.0 * p.n);
    });
}

double threshold_rho_d(const ExtremalParams& p) {
    p.validate();
    return cache().get(Theorem::Distance, p.n, p.delta, [&] {
        const Cubic c = family_cubic(QuotientFamily::DistanceExtremal, p.n, 0, p.delta);
        const double n = p.n, d = p.delta;
        // 2W/n of the extremal graph bounds the root from below; it is >= n + d - 3 once n >= 3d - 3.
        const double wiener_bound = (n * n + (2 * d - 3) * n - 3 * d * d + 3 * d) / n;
        const double lo = std::min(n + d - 3, wiener_bound);
        return checked_largest_root(c, {lo, 3.0 * n}, 4.0 * n);
    });
}

bool recognize_extremal(const Graph& g, int delta) {
    const int n = g.order();
    if (delta < 1 || n - 2 * delta + 1 < 1) return false;
    VertexMask hubs = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) hubs |= VertexMask{1} << v;
    }
    if (std::popcount(hubs) != delta) return false;
    VertexMask pendant = 0;
    VertexMask clique = 0;
    for (int v = 0; v < n; ++v) {
        if ((hubs >> v) & 1U) continue;
        if (g.neighbor_mask(v) == hubs) {
            pendant |= VertexMask{1} << v;
        } else {
            clique |= VertexMask{1} << v;
        }
    }
    if (n == 2 * delta) {
        // The large clique is a single vertex indistinguishable from the others.
        return std::popcount(pendant) == delta && clique == 0;
    }
    if (std::popcount(pendant) != delta - 1 || std::popcount(clique) != n - 2 * delta + 1) return false;
    const VertexMask closed = clique | hubs;
    for (VertexMask m = clique; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (g.neighbor_mask(v) != (closed & ~(VertexMask{1} << v))) return false;
    }
    return true;
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::EvenFactorGuaranteed: return "even-factor-guaranteed";
        case Conclusion::ExtremalException: return "extremal-exception";
        case Conclusion::Inconclusive: return "inconclusive";
        case Conclusion::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

std::string to_string(OraclePolicy policy) {
    switch (policy) {
        case OraclePolicy::Borderline: return "borderline";
        case OraclePolicy::Claims: return "claims";
        case OraclePolicy::Always: return "always";
    }
    return "unknown";
}

Rational order_bound(Theorem theorem, int delta) {
    const Rational d(delta);
    if (theorem == Theorem::SignlessLaplacian) {
        return std::max(Rational(7 * delta - 7), d * d / 4 + d / 2 + 6);
    }
    return std::max(Rational(8 * delta - 7), d * d / 3 + 3);
}

TheoremVerdict check_theorem(const Graph& g, Theorem theorem, const TheoremOptions& options) {
    TheoremVerdict v;
    v.theorem = theorem;
    v.diagnostic = options.delta_override.has_value();
    const int n = g.order();
    const int delta = options.delta_override.value_or(min_degree(g));

    Hypotheses& h = v.hypotheses;
    h.delta = delta;
    h.connected = n > 0 && is_connected(g);
    h.even_order = n > 0 && n % 2 == 0;
    h.min_degree_ok = delta >= 2;
    h.required_order = order_bound(theorem, delta);
    h.order_bound_ok = Rational(n) >= h.required_order;

    if (theorem == Theorem::SignlessLaplacian) {
        if (n > 0) v.spectral_value = rho_q(g, options.eigen);
    } else if (h.connected) {
        v.spectral_value = rho_d(g, options.eigen);
    }

    if (!h.all()) {
        v.conclusion = Conclusion::NotApplicable;
        if (options.oracle_policy == OraclePolicy::Always) v.oracle = find_even_factor(g, options.oracle);
        return v;
    }

    const ExtremalParams params{n, delta};
    v.threshold = theorem == Theorem::SignlessLaplacian ? threshold_rho_q(params) : threshold_rho_d(params);
    const double value = *v.spectral_value;
    const double gap = value - *v.threshold;
    v.spectral_condition = theorem == Theorem::SignlessLaplacian ? gap >= -options.epsilon : gap <= options.epsilon;
    v.borderline = std::abs(gap) <= options.borderline_band;
    v.extremal = recognize_extremal(g, delta);
    if (!v.spectral_condition) {
        v.conclusion = Conclusion::Inconclusive;
    } else {
        v.conclusion = v.extremal ? Conclusion::ExtremalException : Conclusion::EvenFactorGuaranteed;
    }
    const bool run = v.borderline || options.oracle_policy == OraclePolicy::Always ||
                     (options.oracle_policy == OraclePolicy::Claims && v.spectral_condition);
    if (run) v.oracle = find_even_factor(g, options.oracle);
    return v;
}

TheoremVerdict check_theorem_1(const Graph& g, const TheoremOptions& options) {
    return check_theorem(g, Theorem::SignlessLaplacian, options);
}

TheoremVerdict check_theorem_2(const Graph& g, const TheoremOptions& options) {
    return check_theorem(g, Theorem::Distance, options);
}

PerronABC perron_abc(const ExtremalParams& p) {
    p.validate();
    const QuotientMatrix q = family_quotient_template(QuotientFamily::DistanceExtremal, p.n, 0, p.delta);
    PerronABC out;
    out.rho = threshold_rho_d(p);

    // Null vector of (B - rho I) as the cross product of its two most independent rows.
    using Row = std::array<long double, 3>;
    std::array<Row, 3> m{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = q.value(i, j) - (i == j ? out.rho : 0.0);
    }
    auto cross = [](const Row& x, const Row& y) {
        return Row{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
    };
    auto norm = [](const Row& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]); };
    Row best = cross(m[0], m[1]);
    for (const Row& candidate : {cross(m[0], m[2]), cross(m[1], m[2])}) {
        if (norm(candidate) > norm(best)) best = candidate;
    }
    if (best[0] == 0.0L) throw std::runtime_error("perron_abc: degenerate null vector");
    const long double a = 1.0L, b = best[1] / best[0], c = best[2] / best[0];
    out.a = static_cast<double>(a);
    out.b = static_cast<double>(b);
    out.c = static_cast<double>(c);
    if (!(out.b > 0.0 && out.c > 0.0)) throw std::runtime_error("perron_abc: eigenvector is not positive");

    const std::array<long double, 3> x{a, b, c};
    for (int i = 0; i < 3; ++i) {
        long double r = 0.0L;
        for (int j = 0; j < 3; ++j) r += q.value(i, j) * x[j];
        r -= out.rho * x[i];
        out.system_residual = std::max(out.system_residual, static_cast<double>(std::abs(r)));
    }
    const long double rho = out.rho, n = p.n, d = p.delta;
    out.ratio_residual = static_cast<double>(std::abs(b - (rho + n - 2 * d + 2) / (2 * rho + d - 2) * a));
    out.elimination_ratio_residual = static_cast<double>(std::abs(b - (rho + n - 2 * d + 2) / (2 * rho - d + 2) * a));
    out.two_b_minus_a = static_cast<double>(2 * b - a);
    out.two_b_minus_a_closed_form = static_cast<double>((2 * n - 5 * d + 6) / (2 * rho + d - 2) * a);
    return out;
}

}  // namespace evenfactor

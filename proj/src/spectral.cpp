#include "evenfactor/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "evenfactor/errors.hpp"

namespace evenfactor {

SymMatrix::SymMatrix(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative matrix order");
    entries_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(rows[i][j])) throw std::invalid_argument("non-finite matrix entry");
            if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
            m.entries_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
        }
    }
    return m;
}

void SymMatrix::set(int i, int j, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite matrix entry");
    entries_[static_cast<std::size_t>(i) * order_ + j] = value;
    entries_[static_cast<std::size_t>(j) * order_ + i] = value;
}

double SymMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < order_; ++i) {
        double s = 0.0;
        for (double v : row(i)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

bool SymMatrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v >= 0.0; });
}

bool SymMatrix::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v == std::round(v); });
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(order_, 0.0);
    for (int i = 0; i < order_; ++i) {
        const auto r = row(i);
        y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
    }
    return y;
}

PerronResult largest_eigenvalue(const SymMatrix& m, const EigenOptions& options) {
    const int n = m.order();
    if (n == 0) throw std::invalid_argument("largest_eigenvalue of an empty matrix");

    double gershgorin_low = 0.0;
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) off += std::abs(m(i, j));
        }
        gershgorin_low = std::min(gershgorin_low, m(i, i) - off);
    }
    const double shift = m.is_nonnegative() ? -gershgorin_low / 2.0 : -gershgorin_low;
    const double scale = 1.0 + m.inf_norm();

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double previous = 0.0;
    double value = 0.0;
    double residual = 0.0;
    for (int it = 1; it <= options.max_iterations; ++it) {
        std::vector<double> y = m.multiply(x);
        value = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - value * x[i]));
        if (it > 1 && std::abs(value - previous) < options.value_tolerance * scale &&
            residual < options.residual_tolerance * scale) {
            return {value, std::move(x), it, residual};
        }
        previous = value;
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] += shift * x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            // x lies in the null space of M + cI; only possible for the zero matrix with no shift.
            return {value, std::move(x), it, residual};
        }
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw NonConvergence(options.max_iterations, residual);
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.order());
    for (auto [u, v] : g.edges()) m.set(u, v, 1.0);
    return m;
}

SymMatrix signless_laplacian(const Graph& g) {
    SymMatrix m = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
    return m;
}

std::vector<std::vector<int>> distances(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (int src = 0; src < n; ++src) {
        VertexMask seen = VertexMask{1} << src;
        VertexMask frontier = seen;
        d[src][src] = 0;
        for (int level = 1; frontier; ++level) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
            next &= ~seen;
            for (VertexMask f = next; f; f &= f - 1) d[src][std::countr_zero(f)] = level;
            seen |= next;
            frontier = next;
        }
        if (seen != g.all_vertices()) throw DisconnectedGraph();
    }
    return d;
}

SymMatrix distance_matrix(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("distance matrix of the empty graph");
    const auto d = distances(g);
    SymMatrix m(g.order());
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) m.set(i, j, d[i][j]);
    }
    return m;
}

double rho_q(const Graph& g, const EigenOptions& options) {
    if (g.order() == 0) throw std::invalid_argument("rho_q needs at least one vertex");
    return largest_eigenvalue(signless_laplacian(g), options).value;
}

double rho_d(const Graph& g, const EigenOptions& options) {
    return largest_eigenvalue(distance_matrix(g), options).value;
}

long long wiener_index(const Graph& g) {
    long long total = 0;
    const auto d = distances(g);
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) total += d[i][j];
    }
    return total;
}

}  // namespace evenfactor

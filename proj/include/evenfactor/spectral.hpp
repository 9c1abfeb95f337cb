#pragma once

#include <span>
#include <vector>

#include "evenfactor/graph.hpp"

namespace evenfactor {

// Dense real symmetric matrix, row-major. Entries are finite.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int order);
    // Throws std::invalid_argument on non-square, asymmetric or non-finite input.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int order() const { return order_; }
    double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    // Sets (i, j) and (j, i).
    void set(int i, int j, double value);
    std::span<const double> row(int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * order_, static_cast<std::size_t>(order_)};
    }

    double inf_norm() const;
    bool is_nonnegative() const;
    bool is_integral() const;
    std::vector<double> multiply(std::span<const double> x) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    int order_ = 0;
    std::vector<double> entries_;
};

struct PerronResult {
    double value = 0.0;
    std::vector<double> vector;  // unit 2-norm
    int iterations = 0;
    double residual = 0.0;       // max-norm of M x - value x
};

struct EigenOptions {
    double value_tolerance = 1e-12;     // successive estimates, scaled by 1 + ||M||_inf
    double residual_tolerance = 1e-10;  // scaled by 1 + ||M||_inf
    int max_iterations = 200000;
};

// Largest eigenvalue and eigenvector by shifted power iteration from the
// all-ones vector with Rayleigh-quotient estimates. For nonnegative matrices
// the shift is half the magnitude of the Gershgorin lower bound, which keeps
// M + cI nonnegative and makes the Perron root strictly dominant.
// Throws NonConvergence when the iteration cap is hit.
PerronResult largest_eigenvalue(const SymMatrix& m, const EigenOptions& options = {});

SymMatrix adjacency_matrix(const Graph& g);
// Q(G) = A(G) + D(G).
SymMatrix signless_laplacian(const Graph& g);
// All-pairs BFS distances. Throws DisconnectedGraph.
std::vector<std::vector<int>> distances(const Graph& g);
SymMatrix distance_matrix(const Graph& g);

double rho_q(const Graph& g, const EigenOptions& options = {});
double rho_d(const Graph& g, const EigenOptions& options = {});
long long wiener_index(const Graph& g);

}  // namespace evenfactor

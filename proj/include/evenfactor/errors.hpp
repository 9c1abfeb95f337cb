#pragma once

#include <stdexcept>
#include <string>

namespace evenfactor {

// Malformed graph6 input (bad length, character out of range, padding).
class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Distance-based quantities need a connected graph.
class DisconnectedGraph : public std::domain_error {
public:
    DisconnectedGraph() : std::domain_error("graph is disconnected") {}
    using std::domain_error::domain_error;
};

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Family parameters outside the range where the construction is defined.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// No sign change in the requested (or widened) bracket.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(int iterations, double residual)
        : std::runtime_error("power iteration did not converge after " + std::to_string(iterations) +
                             " iterations (residual " + std::to_string(residual) + ")"),
          iterations_(iterations),
          residual_(residual) {}

    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

}  // namespace evenfactor

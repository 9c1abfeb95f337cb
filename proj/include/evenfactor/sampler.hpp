#pragma once

#include <cstdint>
#include <random>

#include "evenfactor/graph.hpp"

namespace evenfactor {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng);
// Uniform integer in [lo, hi] by rejection.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

// Erdos-Renyi G(n, p) draw.
Graph random_graph(std::mt19937_64& rng, int n, double p);

struct SamplerConfig {
    int n = 10;
    std::uint64_t seed = 42;
    double p_lo = 0.1;
    double p_hi = 1.0;
    int min_degree = 2;
    long long max_attempts = 1'000'000;  // per accepted sample
};

// Connected graphs with min_degree >= config.min_degree. Each attempt draws
// p uniformly from [p_lo, p_hi) and then G(n, p); failed attempts are rejected.
class GraphSampler {
public:
    explicit GraphSampler(const SamplerConfig& config);

    // Throws std::runtime_error after max_attempts consecutive rejections.
    Graph next();
    long long rejected() const { return rejected_; }
    const SamplerConfig& config() const { return config_; }

private:
    SamplerConfig config_;
    std::mt19937_64 rng_;
    long long rejected_ = 0;
};

}  // namespace evenfactor

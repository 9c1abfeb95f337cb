#include "evenfactor/sampler.hpp"

#include <stdexcept>
#include <string>

#include "evenfactor/errors.hpp"

namespace evenfactor {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    if (hi < lo) throw ParameterError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return lo + static_cast<int>(x % span);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    if (n < 0 || n > kMaxOrder) throw ParameterError("random_graph: order out of range");
    std::vector<VertexMask> masks(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (unit_uniform(rng) < p) {
                masks[u] |= VertexMask{1} << v;
                masks[v] |= VertexMask{1} << u;
            }
        }
    }
    return Graph::from_masks(std::move(masks));
}

GraphSampler::GraphSampler(const SamplerConfig& config) : config_(config), rng_(config.seed) {
    if (config.n < 1 || config.n > kMaxOrder) throw ParameterError("sampler order must be in 1.." + std::to_string(kMaxOrder));
    if (!(0.0 <= config.p_lo && config.p_lo <= config.p_hi && config.p_hi <= 1.0)) {
        throw ParameterError("sampler probability range must satisfy 0 <= p_lo <= p_hi <= 1");
    }
    if (config.min_degree > config.n - 1) throw ParameterError("sampler min degree exceeds n - 1");
}

Graph GraphSampler::next() {
    for (long long attempt = 0; attempt < config_.max_attempts; ++attempt) {
        const double p = config_.p_lo + (config_.p_hi - config_.p_lo) * unit_uniform(rng_);
        Graph g = random_graph(rng_, config_.n, p);
        if (is_connected(g) && min_degree(g) >= config_.min_degree) return g;
        ++rejected_;
    }
    throw std::runtime_error("sampler: no acceptable graph after " + std::to_string(config_.max_attempts) + " attempts");
}

}  // namespace evenfactor

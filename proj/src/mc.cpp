#include "tsdt/mc.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tsdt {

namespace {

constexpr std::int64_t kBlock = 1 << 16;

// Raw power sums for one block of draws.
struct BlockSums {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
    std::int64_t n = 0;
};

BlockSums run_block(std::span<const Gaussian> gaussians, std::int64_t count,
                    std::uint64_t block_seed) {
    Rng rng(block_seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    BlockSums b;
    b.n = count;
    for (std::int64_t t = 0; t < count; ++t) {
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& g : gaussians) {
            const double d = g.var > 0.0 ? g.mu + std::sqrt(g.var) * unit(rng) : g.mu;
            m = std::max(m, d);
        }
        const double m2 = m * m;
        b.s1 += m;
        b.s2 += m2;
        b.s3 += m2 * m;
        b.s4 += m2 * m2;
    }
    return b;
}

McMoments reduce_blocks(const std::vector<BlockSums>& blocks) {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
    std::int64_t n = 0;
    for (const auto& b : blocks) {
        s1 += b.s1;
        s2 += b.s2;
        s3 += b.s3;
        s4 += b.s4;
        n += b.n;
    }
    const double dn = static_cast<double>(n);
    const double mean = s1 / dn;
    const double m2 = s2 / dn - mean * mean;
    // Central fourth moment from raw sums.
    const double m4 = (s4 - 4.0 * mean * s3 + 6.0 * mean * mean * s2) / dn -
                      3.0 * mean * mean * mean * mean;
    McMoments out;
    out.trials = n;
    out.mean = mean;
    out.var = m2 * dn / (dn - 1.0);
    out.se_mean = std::sqrt(std::max(m2, 0.0) / dn);
    out.se_var = std::sqrt(std::max(m4 - m2 * m2, 0.0) / dn);
    return out;
}

std::vector<BlockSums> make_block_plan(std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("mc_max_moments: trials must be >= 1");
    const auto nblocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
    std::vector<BlockSums> blocks(nblocks);
    return blocks;
}

}  // namespace

McMoments mc_max_moments(std::span<const Gaussian> gaussians, std::int64_t trials,
                         std::uint64_t seed) {
    auto blocks = make_block_plan(trials);
    const auto nblocks = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t count = std::min(kBlock, trials - b * kBlock);
        blocks[static_cast<std::size_t>(b)] =
            run_block(gaussians, count, splitmix64(seed ^ static_cast<std::uint64_t>(b)));
    }
    return reduce_blocks(blocks);
}

McMoments mc_max_moments_serial(std::span<const Gaussian> gaussians, std::int64_t trials,
                                std::uint64_t seed) {
    auto blocks = make_block_plan(trials);
    const auto nblocks = static_cast<std::int64_t>(blocks.size());
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t count = std::min(kBlock, trials - b * kBlock);
        blocks[static_cast<std::size_t>(b)] =
            run_block(gaussians, count, splitmix64(seed ^ static_cast<std::uint64_t>(b)));
    }
    return reduce_blocks(blocks);
}

}  // namespace tsdt

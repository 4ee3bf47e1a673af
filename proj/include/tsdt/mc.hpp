#pragma once

#include <cstdint>
#include <span>

#include "tsdt/posterior.hpp"

namespace tsdt {

struct McMoments {
    double mean = 0.0;
    double var = 0.0;
    double se_mean = 0.0;  // standard error of the mean estimate
    double se_var = 0.0;   // standard error of the variance estimate
    std::int64_t trials = 0;
};

// Sample moments of max over independent draws from the given Gaussians.
// Work is split into fixed 64k blocks, each seeded from (seed, block index)
// and reduced in block order, so the result is independent of thread count
// and bit-identical to the serial reference.
McMoments mc_max_moments(std::span<const Gaussian> gaussians, std::int64_t trials,
                         std::uint64_t seed);

McMoments mc_max_moments_serial(std::span<const Gaussian> gaussians, std::int64_t trials,
                                std::uint64_t seed);

}  // namespace tsdt

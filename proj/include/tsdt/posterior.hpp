#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsdt/types.hpp"

namespace tsdt {

struct Gaussian {
    double mu = 0.0;
    double var = 0.0;
};

// Beta posterior over a prefix-prediction success rate. alpha = 1 + c,
// beta = 1 + n - c, so alpha + beta = n + 2 always.
struct BetaParams {
    double alpha = 1.0;
    double beta = 1.0;

    static BetaParams from_counts(std::int64_t correct, std::int64_t n) {
        return {1.0 + static_cast<double>(correct),
                1.0 + static_cast<double>(n - correct)};
    }
};

// Moment-matched Normal approximation of a Beta distribution.
Gaussian beta_moments(const BetaParams& p);

// Moments of max(g1, g2) for independent Normals (Clark's formulas).
// Exact for the pair; the Gaussian reading of the result is the approximation.
Gaussian clark_max(const Gaussian& g1, const Gaussian& g2);

// Nested pairwise Clark fold, right-associative, over already-penalized children.
Gaussian fold_max(std::span<const Gaussian> children);

// Shifts a split child's mean by -lambda; terminal children are exempt.
Gaussian penalize(const Gaussian& child, bool is_terminal, double lambda);

struct ChildPosterior {
    Gaussian value;
    bool is_terminal = false;
};

// Posterior of the child with maximum penalized mean; the stored mean is
// penalized. Ties prefer the terminal child, then the lowest index.
Gaussian fast_max(std::span<const ChildPosterior> children, double lambda);

// One draw per child, split draws shifted by -lambda, argmax index.
int thompson_select(std::span<const ChildPosterior> children, double lambda, Rng& rng);

// Monte Carlo estimate of the penalized-argmax frequencies.
std::vector<double> policy_probabilities(std::span<const ChildPosterior> children,
                                         double lambda, Rng& rng,
                                         std::int64_t trials = 10000);

struct WeightedGaussian {
    double weight = 0.0;  // leaf probability estimate
    Gaussian g;
};

// mu = sum w_l mu_l, var = (sum w_l^2 var_l)^gamma. gamma = 1 is the plain
// linear-combination variance; gamma < 1 slows the variance collapse.
Gaussian aggregate_leaf_posteriors(std::span<const WeightedGaussian> leaves, double gamma);

inline double draw_gaussian(const Gaussian& g, Rng& rng) {
    if (g.var <= 0.0) return g.mu;
    return std::normal_distribution<double>(g.mu, std::sqrt(g.var))(rng);
}

}  // namespace tsdt

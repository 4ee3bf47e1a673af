#include "tsdt/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tsdt {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

Gaussian beta_moments(const BetaParams& p) {
    const double s = p.alpha + p.beta;
    Gaussian g;
    g.mu = p.alpha / s;
    g.var = (p.alpha * p.beta) / (s * s * (1.0 + s));
    return g;
}

Gaussian clark_max(const Gaussian& g1, const Gaussian& g2) {
    const double a = std::sqrt(g1.var + g2.var);
    if (a <= 0.0) return {std::max(g1.mu, g2.mu), 0.0};
    const double alpha = (g1.mu - g2.mu) / a;
    const double cdf = normal_cdf(alpha);
    const double cdfm = normal_cdf(-alpha);
    const double pdf = normal_pdf(alpha);
    Gaussian out;
    out.mu = g1.mu * cdf + g2.mu * cdfm + a * pdf;
    out.var = (g1.mu * g1.mu + g1.var) * cdf + (g2.mu * g2.mu + g2.var) * cdfm +
              (g1.mu + g2.mu) * a * pdf - out.mu * out.mu;
    out.var = std::max(out.var, 0.0);
    return out;
}

Gaussian fold_max(std::span<const Gaussian> children) {
    if (children.empty()) throw std::invalid_argument("fold_max: empty child list");
    Gaussian acc = children.back();
    for (std::size_t i = children.size() - 1; i-- > 0;)
        acc = clark_max(children[i], acc);
    return acc;
}

Gaussian penalize(const Gaussian& child, bool is_terminal, double lambda) {
    if (is_terminal) return child;
    return {child.mu - lambda, child.var};
}

Gaussian fast_max(std::span<const ChildPosterior> children, double lambda) {
    if (children.empty()) throw std::invalid_argument("fast_max: empty child list");
    std::size_t best = 0;
    Gaussian best_g = penalize(children[0].value, children[0].is_terminal, lambda);
    for (std::size_t i = 1; i < children.size(); ++i) {
        const Gaussian g = penalize(children[i].value, children[i].is_terminal, lambda);
        const bool wins = g.mu > best_g.mu ||
                          (g.mu == best_g.mu && children[i].is_terminal && !children[best].is_terminal);
        if (wins) {
            best = i;
            best_g = g;
        }
    }
    return best_g;
}

int thompson_select(std::span<const ChildPosterior> children, double lambda, Rng& rng) {
    if (children.empty()) throw std::invalid_argument("thompson_select: empty child list");
    int best = 0;
    double best_draw = 0.0;
    for (std::size_t i = 0; i < children.size(); ++i) {
        double d = draw_gaussian(children[i].value, rng);
        if (!children[i].is_terminal) d -= lambda;
        if (i == 0 || d > best_draw) {
            best = static_cast<int>(i);
            best_draw = d;
        }
    }
    return best;
}

std::vector<double> policy_probabilities(std::span<const ChildPosterior> children,
                                         double lambda, Rng& rng, std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("policy_probabilities: trials must be >= 1");
    std::vector<std::int64_t> wins(children.size(), 0);
    for (std::int64_t t = 0; t < trials; ++t)
        ++wins[static_cast<std::size_t>(thompson_select(children, lambda, rng))];
    std::vector<double> probs(children.size());
    for (std::size_t i = 0; i < probs.size(); ++i)
        probs[i] = static_cast<double>(wins[i]) / static_cast<double>(trials);
    return probs;
}

Gaussian aggregate_leaf_posteriors(std::span<const WeightedGaussian> leaves, double gamma) {
    if (leaves.empty()) throw std::invalid_argument("aggregate_leaf_posteriors: no leaves");
    double mu = 0.0;
    double var_sum = 0.0;
    for (const auto& wl : leaves) {
        mu += wl.weight * wl.g.mu;
        var_sum += wl.weight * wl.weight * wl.g.var;
    }
    return {mu, std::pow(var_sum, gamma)};
}

}  // namespace tsdt

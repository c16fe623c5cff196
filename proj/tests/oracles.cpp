#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace oracle {

double transport_lp_1d(const std::vector<double>& atoms_a, const std::vector<double>& weights_a,
                       const std::vector<double>& atoms_b, const std::vector<double>& weights_b) {
    if (atoms_a.size() != weights_a.size() || atoms_b.size() != weights_b.size() ||
        atoms_a.empty() || atoms_b.empty())
        throw std::invalid_argument("transport_lp_1d: bad marginals");

    const auto sorted = [](const std::vector<double>& atoms, const std::vector<double>& weights) {
        std::vector<std::size_t> idx(atoms.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t i, std::size_t j) { return atoms[i] < atoms[j]; });
        std::vector<std::pair<double, double>> out;
        out.reserve(idx.size());
        for (std::size_t i : idx) out.emplace_back(atoms[i], weights[i]);
        return out;
    };
    auto a = sorted(atoms_a, weights_a);
    auto b = sorted(atoms_b, weights_b);

    const double mass_a = std::accumulate(a.begin(), a.end(), 0.0,
                                          [](double s, auto& p) { return s + p.second; });
    const double mass_b = std::accumulate(b.begin(), b.end(), 0.0,
                                          [](double s, auto& p) { return s + p.second; });
    if (std::abs(mass_a - mass_b) > 1e-9 || std::abs(mass_a - 1.0) > 1e-9)
        throw std::invalid_argument("transport_lp_1d: marginals must be probability measures");

    double cost = 0.0;
    std::size_t i = 0, j = 0;
    double rem_a = a[0].second, rem_b = b[0].second;
    while (i < a.size() && j < b.size()) {
        const double move = std::min(rem_a, rem_b);
        const double d = a[i].first - b[j].first;
        cost += move * d * d;
        rem_a -= move;
        rem_b -= move;
        if (rem_a <= 1e-15) {
            ++i;
            if (i < a.size()) rem_a = a[i].second;
        }
        if (rem_b <= 1e-15) {
            ++j;
            if (j < b.size()) rem_b = b[j].second;
        }
    }
    return std::sqrt(std::max(cost, 0.0));
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre_unit: n must be positive");
    std::vector<double> nodes(n), weights(n);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-angle initial guess.
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                   (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = 0.5 * (1.0 - x);  // map [-1, 1] -> [0, 1], reversed order is fine
        weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return {nodes, weights};
}

TiltQuadrature quad_tilt(double theta, double a_hat, double c1,
                         const std::function<double(double)>& prior_density) {
    const auto [nodes, weights] = gauss_legendre_unit(200);
    double z = 0.0, mean_num = 0.0, second_num = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double lambda = nodes[i];
        const double rho = a_hat + c1 * lambda;
        const double val = std::exp(-theta * rho) * prior_density(lambda);
        z += weights[i] * val;
        mean_num += weights[i] * val * rho;
        second_num += weights[i] * val * rho * rho;
    }
    TiltQuadrature out;
    out.log_z = std::log(z);
    out.mean = mean_num / z;
    out.variance = std::max(second_num / z - out.mean * out.mean, 0.0);
    double kl = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double lambda = nodes[i];
        const double rho = a_hat + c1 * lambda;
        const double w = prior_density(lambda);
        const double p = std::exp(-theta * rho) * w / z;
        if (p > 0.0 && w > 0.0) kl += weights[i] * p * std::log(p / w);
    }
    out.kl = std::max(kl, 0.0);
    return out;
}

double uniform_density(double) { return 1.0; }

std::function<double(double)> beta_density(double a, double b) {
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    return [a, b, log_beta](double lambda) {
        if (lambda <= 0.0 || lambda >= 1.0) return 0.0;
        return std::exp((a - 1.0) * std::log(lambda) + (b - 1.0) * std::log1p(-lambda) -
                        log_beta);
    };
}

MonteCarloMoments mc_mixture_moments(const std::vector<double>& m, const std::vector<double>& s,
                                     const std::vector<double>& w, std::size_t n_samples,
                                     std::uint64_t seed) {
    if (m.size() != s.size() || m.size() != w.size() || m.empty())
        throw std::invalid_argument("mc_mixture_moments: bad component arrays");
    if (n_samples < 2) throw std::invalid_argument("mc_mixture_moments: need samples");
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double sum1 = 0.0, sum2 = 0.0, sum4 = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double z = normal(engine);
        double x = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i) x += w[i] * std::exp(m[i] + s[i] * z);
        const double x2 = x * x;
        sum1 += x;
        sum2 += x2;
        sum4 += x2 * x2;
    }
    const double n = static_cast<double>(n_samples);
    MonteCarloMoments out;
    out.mean = sum1 / n;
    out.second = sum2 / n;
    const double var_x = std::max(sum2 / n - out.mean * out.mean, 0.0);
    const double var_x2 = std::max(sum4 / n - out.second * out.second, 0.0);
    out.mean_se = std::sqrt(var_x / n);
    out.second_se = std::sqrt(var_x2 / n);
    return out;
}

GridPosterior grid_posterior(double prior_mean, double prior_var, double y, double obs_var,
                             std::size_t n_grid) {
    if (!(prior_var > 0.0) || !(obs_var > 0.0))
        throw std::invalid_argument("grid_posterior: variances must be positive");
    const double sd = std::sqrt(prior_var);
    const double lo = std::min(prior_mean - 12.0 * sd, y - 12.0 * std::sqrt(obs_var));
    const double hi = std::max(prior_mean + 12.0 * sd, y + 12.0 * std::sqrt(obs_var));
    const double step = (hi - lo) / static_cast<double>(n_grid - 1);
    std::vector<double> logp(n_grid);
    double max_lp = -1e300;
    for (std::size_t i = 0; i < n_grid; ++i) {
        const double x = lo + step * static_cast<double>(i);
        const double dp = x - prior_mean;
        const double dl = y - x;
        logp[i] = -0.5 * dp * dp / prior_var - 0.5 * dl * dl / obs_var;
        max_lp = std::max(max_lp, logp[i]);
    }
    double z = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < n_grid; ++i) {
        const double x = lo + step * static_cast<double>(i);
        const double p = std::exp(logp[i] - max_lp);
        z += p;
        m1 += p * x;
        m2 += p * x * x;
    }
    GridPosterior out;
    out.mean = m1 / z;
    out.variance = std::max(m2 / z - out.mean * out.mean, 0.0);
    return out;
}

}  // namespace oracle

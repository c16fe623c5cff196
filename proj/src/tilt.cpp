#include "beliefsim/tilt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "beliefsim/errors.hpp"
#include "beliefsim/numerics.hpp"

namespace beliefsim {

namespace {

// Factors for the uniform prior on [0, 1] with rho = a_hat + c1 * lambda,
// written in u = theta * c1. They are evaluated through expm1/series so the
// u -> 0 limit and both tails stay accurate.

// log (1 - e^{-u}) / u
double log_g(double u) {
    if (std::abs(u) < 1e-6) return -0.5 * u + u * u / 24.0;
    if (u > 0.0) {
        if (u > 745.0) return -std::log(u);
        return std::log(-std::expm1(-u)) - std::log(u);
    }
    const double v = -u;
    if (v > 700.0) return v - std::log(v);
    return std::log(std::expm1(v)) - std::log(v);
}

// 1/u - 1/(e^u - 1); the tilted mean of lambda is this factor.
double h_factor(double u) {
    if (std::abs(u) < 1e-4) return 0.5 - u / 12.0 + u * u * u / 720.0;
    if (u > 700.0) return 1.0 / u;
    return 1.0 / u - 1.0 / std::expm1(u);
}

// 1/u^2 - 1/(4 sinh^2(u/2)); the tilted variance of lambda.
double var_factor(double u) {
    if (std::abs(u) < 1e-3) return 1.0 / 12.0 - u * u / 240.0;
    if (std::abs(u) > 600.0) return 1.0 / (u * u);
    const double sh = 2.0 * std::sinh(0.5 * u);
    return 1.0 / (u * u) - 1.0 / (sh * sh);
}

// -u h(u) - log g(u) >= 0; KL against the uniform prior.
double kl_u(double u) {
    if (std::abs(u) < 1e-3) {
        const double u2 = u * u;
        return u2 / 24.0 - u2 * u2 / 960.0;
    }
    return std::max(-u * h_factor(u) - log_g(u), 0.0);
}

struct BetaMoments {
    double mean;    // tilted mean of lambda in [0, 1]
    double second;  // tilted second moment of lambda
    double log_f0;  // log 1F1(a; a+b; u)
};

BetaMoments beta_moments(double u, double a, double b) {
    // Ratios in log space keep extreme tilts (|u| far beyond 700) finite.
    const double log_f0 = log_kummer_1f1(a, a + b, u);
    const double log_f1 = log_kummer_1f1(a + 1.0, a + b + 1.0, u);
    const double log_f2 = log_kummer_1f1(a + 2.0, a + b + 2.0, u);
    BetaMoments mom;
    mom.mean = (a / (a + b)) * std::exp(log_f1 - log_f0);
    mom.second =
        (a * (a + 1.0) / ((a + b) * (a + b + 1.0))) * std::exp(log_f2 - log_f0);
    mom.log_f0 = log_f0;
    return mom;
}

struct DiscreteTilt {
    double log_z;
    double mean;
    double variance;
};

DiscreteTilt discrete_tilt(double theta, const ExpertFamily& f) {
    const std::size_t n = f.rho.size();
    std::vector<double> logits(n);
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        logits[j] = -theta * f.rho[j] + std::log(f.prior[j]);
        m = std::max(m, logits[j]);
    }
    double w_sum = 0.0, mean_acc = 0.0;
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = std::exp(logits[j] - m);
        w_sum += w[j];
        mean_acc += w[j] * f.rho[j];
    }
    DiscreteTilt out;
    out.log_z = m + std::log(w_sum);
    out.mean = mean_acc / w_sum;
    double var_acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = f.rho[j] - out.mean;
        var_acc += w[j] * d * d;
    }
    out.variance = var_acc / w_sum;
    return out;
}

void require_finite_theta(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("tilt: theta must be finite");
}

}  // namespace

ExpertFamily ExpertFamily::uniform(double a_hat, double c1) {
    ExpertFamily f;
    f.kind = PriorKind::affine_uniform;
    f.a_hat = a_hat;
    f.c1 = c1;
    validate_family(f);
    return f;
}

ExpertFamily ExpertFamily::beta(double a_hat, double c1, double a_pi, double b_pi) {
    ExpertFamily f;
    f.kind = PriorKind::affine_beta;
    f.a_hat = a_hat;
    f.c1 = c1;
    f.a_pi = a_pi;
    f.b_pi = b_pi;
    validate_family(f);
    return f;
}

ExpertFamily ExpertFamily::make_discrete(std::vector<double> atoms,
                                         std::vector<double> prior,
                                         std::vector<double> rho) {
    ExpertFamily f;
    f.kind = PriorKind::discrete;
    f.atoms = std::move(atoms);
    f.prior = std::move(prior);
    f.rho = std::move(rho);
    validate_family(f);
    return f;
}

void validate_family(const ExpertFamily& f) {
    if (f.kind == PriorKind::discrete) {
        const std::size_t n = f.atoms.size();
        if (n == 0 || f.prior.size() != n || f.rho.size() != n)
            throw std::invalid_argument("ExpertFamily: discrete arrays must match and be nonempty");
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j + 1 < n && !(f.atoms[j] < f.atoms[j + 1]))
                throw std::invalid_argument("ExpertFamily: labels must be strictly increasing");
            if (!(f.prior[j] > 0.0))
                throw std::invalid_argument("ExpertFamily: prior weights must be positive");
            if (!std::isfinite(f.rho[j]))
                throw std::invalid_argument("ExpertFamily: non-finite proposal value");
            total += f.prior[j];
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("ExpertFamily: prior weights must sum to 1");
        return;
    }
    if (!(f.c1 > 0.0)) throw std::invalid_argument("ExpertFamily: c1 must be positive");
    if (!std::isfinite(f.a_hat)) throw std::invalid_argument("ExpertFamily: a_hat not finite");
    if (f.kind == PriorKind::affine_beta && (!(f.a_pi > 0.0) || !(f.b_pi > 0.0)))
        throw std::invalid_argument("ExpertFamily: Beta prior parameters must be positive");
}

double rho_min(const ExpertFamily& f) {
    if (f.kind == PriorKind::discrete)
        return *std::min_element(f.rho.begin(), f.rho.end());
    return f.a_hat;
}

double rho_max(const ExpertFamily& f) {
    if (f.kind == PriorKind::discrete)
        return *std::max_element(f.rho.begin(), f.rho.end());
    return f.a_hat + f.c1;
}

double log_partition(double theta, const ExpertFamily& f) {
    require_finite_theta(theta);
    validate_family(f);
    switch (f.kind) {
        case PriorKind::affine_uniform:
            return -theta * f.a_hat + log_g(theta * f.c1);
        case PriorKind::affine_beta:
            return -theta * f.a_hat +
                   log_kummer_1f1(f.a_pi, f.a_pi + f.b_pi, -theta * f.c1);
        case PriorKind::discrete:
            return discrete_tilt(theta, f).log_z;
    }
    throw std::invalid_argument("log_partition: unknown family kind");
}

double tilted_mean(double theta, const ExpertFamily& f) {
    require_finite_theta(theta);
    validate_family(f);
    switch (f.kind) {
        case PriorKind::affine_uniform:
            return f.a_hat + f.c1 * h_factor(theta * f.c1);
        case PriorKind::affine_beta:
            return f.a_hat +
                   f.c1 * beta_moments(-theta * f.c1, f.a_pi, f.b_pi).mean;
        case PriorKind::discrete:
            return discrete_tilt(theta, f).mean;
    }
    throw std::invalid_argument("tilted_mean: unknown family kind");
}

double tilted_variance(double theta, const ExpertFamily& f) {
    require_finite_theta(theta);
    validate_family(f);
    switch (f.kind) {
        case PriorKind::affine_uniform:
            return f.c1 * f.c1 * var_factor(theta * f.c1);
        case PriorKind::affine_beta: {
            const BetaMoments mom = beta_moments(-theta * f.c1, f.a_pi, f.b_pi);
            return f.c1 * f.c1 * std::max(mom.second - mom.mean * mom.mean, 0.0);
        }
        case PriorKind::discrete:
            return discrete_tilt(theta, f).variance;
    }
    throw std::invalid_argument("tilted_variance: unknown family kind");
}

double kl_at(double theta, const ExpertFamily& f) {
    require_finite_theta(theta);
    validate_family(f);
    switch (f.kind) {
        case PriorKind::affine_uniform:
            // a_hat cancels between -theta psi and -log Z.
            return kl_u(theta * f.c1);
        case PriorKind::affine_beta: {
            const double u = -theta * f.c1;
            const BetaMoments mom = beta_moments(u, f.a_pi, f.b_pi);
            return std::max(u * mom.mean - mom.log_f0, 0.0);
        }
        case PriorKind::discrete: {
            const DiscreteTilt t = discrete_tilt(theta, f);
            return std::max(-theta * t.mean - t.log_z, 0.0);
        }
    }
    throw std::invalid_argument("kl_at: unknown family kind");
}

double solve_fixed_point(double a, double alpha, double gamma, const ExpertFamily& f) {
    if (!(alpha > 0.0)) throw std::invalid_argument("solve_fixed_point: alpha must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("solve_fixed_point: gamma must be positive");
    if (!std::isfinite(a)) throw std::invalid_argument("solve_fixed_point: a must be finite");
    validate_family(f);

    const double slope = alpha / gamma;
    const auto residual = [&](double theta) {
        return tilted_mean(theta, f) - a - slope * theta;
    };
    // The tilted mean stays inside [rho_min, rho_max], so the root lies in an
    // interval known a priori.
    const double lo = std::min(0.0, (rho_min(f) - a) / slope) - 1.0;
    const double hi = std::max(0.0, (rho_max(f) - a) / slope) + 1.0;
    const double f_lo = residual(lo);
    const double f_hi = residual(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    const double root = brent_root(residual, Bracket(lo, hi, f_lo, f_hi), 1e-15);
    if (std::abs(residual(root)) > 1e-10 * (1.0 + std::abs(a)))
        throw NumericalError("solve_fixed_point: residual did not converge");
    return root;
}

TiltSolution calibrate_budget(double K, double T, const ExpertFamily& f, BudgetMode mode,
                              double gamma, double theta_max) {
    if (!(K > 0.0)) throw std::invalid_argument("calibrate_budget: K must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("calibrate_budget: T must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("calibrate_budget: gamma must be positive");
    if (!(theta_max > 0.0)) throw std::invalid_argument("calibrate_budget: theta_max must be positive");
    validate_family(f);

    TiltSolution sol;
    if (mode == BudgetMode::alpha_sweep) {
        const TimeGrid unit_grid(T, 1);
        const SweepSolution sweep = calibrate_budget_sweep(K, {f}, unit_grid, gamma);
        sol.theta = sweep.theta.front();
        sol.alpha = sweep.alpha;
        sol.psi = tilted_mean(sol.theta, f);
        sol.kl = kl_at(sol.theta, f);
        sol.delta_shift = sol.psi - f.a_hat;
        sol.budget_binding = true;
        sol.theta_near_zero = sol.theta < 1e-8;
        return sol;
    }

    const auto budget_gap = [&](double theta) { return kl_at(theta, f) * T - K; };
    double hi = 1.0;
    double gap_hi = budget_gap(hi);
    bool bracketed = gap_hi >= 0.0;
    while (!bracketed) {
        const double prev_kl = kl_at(hi, f);
        hi *= 2.0;
        gap_hi = budget_gap(hi);
        if (gap_hi >= 0.0) {
            bracketed = true;
            break;
        }
        // A plateauing KL means the budget cannot bind; report the
        // concentration limit at theta_max instead of expanding forever.
        if (hi > theta_max) {
            const double kl_now = kl_at(hi, f);
            if (kl_now - prev_kl <= 1e-12 * std::max(kl_now, 1.0)) {
                sol.theta = theta_max;
                sol.theta_capped = true;
                sol.psi = tilted_mean(sol.theta, f);
                sol.kl = kl_at(sol.theta, f);
                sol.delta_shift = sol.psi - f.a_hat;
                sol.alpha = gamma * sol.delta_shift / sol.theta;
                sol.budget_binding = false;
                return sol;
            }
        }
        if (hi > 1e15)
            throw NumericalError("calibrate_budget: bracket expansion exceeded 1e15");
    }
    const double lo = hi > 1.0 ? hi / 2.0 : 0.0;
    const double gap_lo = budget_gap(lo);
    double theta;
    if (gap_lo == 0.0)
        theta = lo;
    else if (gap_hi == 0.0)
        theta = hi;
    else
        theta = brent_root(budget_gap, Bracket(lo, hi, gap_lo, gap_hi), 1e-15);

    sol.theta = theta;
    sol.psi = tilted_mean(theta, f);
    sol.kl = kl_at(theta, f);
    sol.delta_shift = sol.psi - f.a_hat;
    sol.theta_near_zero = theta < 1e-8;
    if (theta > 0.0)
        sol.alpha = gamma * sol.delta_shift / theta;
    else
        sol.alpha = std::numeric_limits<double>::infinity();
    sol.budget_binding = true;
    return sol;
}

SweepSolution calibrate_budget_sweep(double K, const std::vector<ExpertFamily>& per_step,
                                     const TimeGrid& grid, double gamma) {
    if (!(K > 0.0)) throw std::invalid_argument("calibrate_budget_sweep: K must be positive");
    if (per_step.empty())
        throw std::invalid_argument("calibrate_budget_sweep: no families given");
    if (per_step.size() != 1 && per_step.size() != grid.n_steps)
        throw std::invalid_argument("calibrate_budget_sweep: need one family or one per step");
    const double dt = per_step.size() == 1 ? grid.horizon : grid.dt();

    const auto integrated_kl = [&](double alpha) {
        double acc = 0.0;
        for (const ExpertFamily& fam : per_step) {
            const double theta = solve_fixed_point(fam.a_hat, alpha, gamma, fam);
            acc += kl_at(theta, fam) * dt;
        }
        return acc;
    };

    double alpha_hi = 1.0;
    int guard = 0;
    while (integrated_kl(alpha_hi) > K) {
        alpha_hi *= 2.0;
        if (++guard > 200)
            throw NumericalError("calibrate_budget_sweep: alpha bracket expansion failed");
    }
    double alpha_lo = alpha_hi;
    guard = 0;
    while (integrated_kl(alpha_lo) < K) {
        alpha_lo *= 0.5;
        if (++guard > 2000)
            throw NumericalError("calibrate_budget_sweep: budget unattainable on this family");
    }
    const auto gap = [&](double log_alpha) { return integrated_kl(std::exp(log_alpha)) - K; };
    const double llo = std::log(alpha_lo), lhi = std::log(alpha_hi);
    double alpha;
    const double g_lo = gap(llo), g_hi = gap(lhi);
    if (g_lo == 0.0)
        alpha = alpha_lo;
    else if (g_hi == 0.0)
        alpha = alpha_hi;
    else
        alpha = std::exp(brent_root(gap, Bracket(llo, lhi, g_lo, g_hi), 1e-14));

    SweepSolution out;
    out.alpha = alpha;
    out.theta.reserve(per_step.size());
    double acc = 0.0;
    for (const ExpertFamily& fam : per_step) {
        const double theta = solve_fixed_point(fam.a_hat, alpha, gamma, fam);
        out.theta.push_back(theta);
        acc += kl_at(theta, fam) * dt;
    }
    out.integrated_kl = acc;
    return out;
}

DiscreteMeasure1D gibbs_weights(double theta, const ExpertFamily& f) {
    require_finite_theta(theta);
    validate_family(f);
    if (f.kind != PriorKind::discrete)
        throw std::invalid_argument("gibbs_weights: requires a discrete family");
    const std::size_t n = f.rho.size();
    std::vector<double> logits(n);
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        logits[j] = -theta * f.rho[j] + std::log(f.prior[j]);
        m = std::max(m, logits[j]);
    }
    double w_sum = 0.0;
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = std::exp(logits[j] - m);
        w_sum += w[j];
    }
    for (double& x : w) x /= w_sum;
    return DiscreteMeasure1D(f.atoms, w);
}

double gibbs_rho_mean(double theta, const ExpertFamily& f) {
    const DiscreteMeasure1D weights = gibbs_weights(theta, f);
    // Zero-weight experts are dropped by the measure; walk the survivors.
    double acc = 0.0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        while (j < f.atoms.size() && f.atoms[j] != weights.atoms()[i]) ++j;
        if (j >= f.atoms.size())
            throw NumericalError("gibbs_rho_mean: label alignment failed");
        acc += weights.weights()[i] * f.rho[j];
    }
    return acc;
}

}  // namespace beliefsim

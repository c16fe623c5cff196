#pragma once

#include <cstddef>
#include <vector>

#include "beliefsim/measures.hpp"
#include "beliefsim/time_grid.hpp"

namespace beliefsim {

// Prior over expert labels lambda together with the proposal-drift map. The
// affine kinds index experts by lambda in [0, 1] with proposals
// rho(lambda) = a_hat + c1 * lambda; lambda is uniform or Beta(a_pi, b_pi)
// under the prior. The discrete kind lists labels, prior weights and
// proposal values explicitly.
enum class PriorKind { affine_uniform, affine_beta, discrete };

struct ExpertFamily {
    PriorKind kind = PriorKind::affine_uniform;
    double a_hat = 0.0;
    double c1 = 1.0;
    double a_pi = 1.0;
    double b_pi = 1.0;
    std::vector<double> atoms;   // discrete: expert labels, strictly increasing
    std::vector<double> prior;   // discrete: positive weights summing to 1
    std::vector<double> rho;     // discrete: proposal drift per expert

    static ExpertFamily uniform(double a_hat, double c1);
    static ExpertFamily beta(double a_hat, double c1, double a_pi, double b_pi);
    static ExpertFamily make_discrete(std::vector<double> atoms, std::vector<double> prior,
                                      std::vector<double> rho);
};

void validate_family(const ExpertFamily& family);

double rho_min(const ExpertFamily& family);
double rho_max(const ExpertFamily& family);

// log of Z(theta) = E_pi[exp(-theta rho(lambda))].
double log_partition(double theta, const ExpertFamily& family);

// Mean of rho under the tilted measure; equals -d log Z / d theta.
double tilted_mean(double theta, const ExpertFamily& family);

// Variance of rho under the tilted measure; equals d^2 log Z / d theta^2 and
// -d(tilted_mean)/d theta.
double tilted_variance(double theta, const ExpertFamily& family);

// KL(tilted || prior) = -theta * tilted_mean(theta) - log Z(theta), >= 0.
double kl_at(double theta, const ExpertFamily& family);

// Unique root of tilted_mean(theta) = a + (alpha / gamma) * theta. Requires
// alpha > 0, gamma > 0; the left side is nonincreasing while the right side
// is strictly increasing, so the root exists and is unique.
double solve_fixed_point(double a, double alpha, double gamma, const ExpertFamily& family);

struct TiltSolution {
    double theta = 0.0;
    double psi = 0.0;          // tilted mean at theta
    double kl = 0.0;           // pointwise KL at theta
    double alpha = 0.0;        // implied regularization weight
    double delta_shift = 0.0;  // psi - a_hat = alpha * theta / gamma
    bool budget_binding = false;
    bool theta_capped = false;
    bool theta_near_zero = false;
};

enum class BudgetMode { constant_theta, alpha_sweep };

// Calibrates theta >= 0 so the KL budget over [0, T] equals K:
// constant_theta solves kl_at(theta) * T = K directly; alpha_sweep bisects on
// alpha and solves the per-time fixed point (identical for a time-constant
// family). alpha is then backed out from the fixed-point identity
// alpha = gamma * (tilted_mean(theta) - a_hat) / theta.
TiltSolution calibrate_budget(double K, double T, const ExpertFamily& family,
                              BudgetMode mode = BudgetMode::constant_theta,
                              double gamma = 1.0, double theta_max = 1e6);

// Time-varying version: one family per grid step, one shared alpha, KL
// integrated over the grid.
struct SweepSolution {
    double alpha = 0.0;
    std::vector<double> theta;
    double integrated_kl = 0.0;
};

SweepSolution calibrate_budget_sweep(double K, const std::vector<ExpertFamily>& per_step,
                                     const TimeGrid& grid, double gamma = 1.0);

// Tilted weights of a discrete family as a measure over expert labels.
DiscreteMeasure1D gibbs_weights(double theta, const ExpertFamily& family);

// Mean of rho under gibbs_weights; convenience for checks.
double gibbs_rho_mean(double theta, const ExpertFamily& family);

}  // namespace beliefsim

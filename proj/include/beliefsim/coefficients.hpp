#pragma once

#include <string>

namespace beliefsim {

// Drift/volatility families that depend on the market-belief mixture only
// through its first moment m1 and standard deviation s. Every family reduces
// exactly to (mu_star * x, sigma_star * x) when the belief collapses to the
// point mass at x, i.e. (m1, s) = (x, 0).
enum class CoefficientVariant {
    baseline,         // b = x (mu* + kappa_d log(m1/x)),  v = x sigma* (1 + kappa_v s/m1)
    mean_revert,      // b = mu* x + kappa (m1 - x),       v = sigma* x
    cv_vol,           // b = mu* x,                        v = sigma* x (1 + kappa cv)
    combined,         // b = mu* x + kappa_d (m1 - x),     v = sigma* x (1 + kappa_v cv)
    ratio_drift,      // b = mu* x (1 + kappa (m1/x - 1)), v = sigma* x
    penalized_drift,  // b = mu* x - lambda x cv^2,        v = sigma* x
    quadratic_vol     // b = mu* x,  v = sigma* x sqrt(1 + kappa ((m1-x)/(m1+eps))^2)
};

// cv denotes the relative dispersion s / (m1 + eps).
struct CoefficientFamily {
    CoefficientVariant variant = CoefficientVariant::baseline;
    double mu_star = 0.08;
    double sigma_star = 0.6;
    double kappa = 0.0;
    double kappa_d = 0.35;
    double kappa_v = 2.75;
    double lambda = 0.0;
    double eps = 0.0;
};

void validate_family(const CoefficientFamily& family);

struct DriftVol {
    double drift;
    double vol;
};

// Evaluates the family at state x under belief moments (m1, s). Requires
// x > 0 and m1 > 0.
DriftVol coefficients(double t, double x, double m1, double s,
                      const CoefficientFamily& family);

CoefficientVariant variant_from_string(const std::string& name);
std::string variant_to_string(CoefficientVariant variant);

}  // namespace beliefsim

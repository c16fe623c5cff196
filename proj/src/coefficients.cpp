#include "beliefsim/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace beliefsim {

void validate_family(const CoefficientFamily& f) {
    if (!(f.sigma_star >= 0.0)) throw std::invalid_argument("CoefficientFamily: sigma_star < 0");
    if (!(f.kappa >= 0.0) || !(f.kappa_d >= 0.0) || !(f.kappa_v >= 0.0) ||
        !(f.lambda >= 0.0) || !(f.eps >= 0.0))
        throw std::invalid_argument("CoefficientFamily: parameters must be nonnegative");
    if (!std::isfinite(f.mu_star)) throw std::invalid_argument("CoefficientFamily: mu_star not finite");
}

DriftVol coefficients(double t, double x, double m1, double s,
                      const CoefficientFamily& f) {
    (void)t;
    if (!(x > 0.0)) throw std::invalid_argument("coefficients: x must be positive");
    if (!(m1 > 0.0)) throw std::invalid_argument("coefficients: m1 must be positive");
    if (!(s >= 0.0)) throw std::invalid_argument("coefficients: s must be nonnegative");

    const double cv = s / (m1 + f.eps);
    DriftVol out{0.0, 0.0};
    switch (f.variant) {
        case CoefficientVariant::baseline:
            out.drift = x * (f.mu_star + f.kappa_d * std::log(m1 / x));
            out.vol = x * f.sigma_star * (1.0 + f.kappa_v * (s / m1));
            break;
        case CoefficientVariant::mean_revert:
            out.drift = f.mu_star * x + f.kappa * (m1 - x);
            out.vol = f.sigma_star * x;
            break;
        case CoefficientVariant::cv_vol:
            out.drift = f.mu_star * x;
            out.vol = f.sigma_star * x * (1.0 + f.kappa * cv);
            break;
        case CoefficientVariant::combined:
            out.drift = f.mu_star * x + f.kappa_d * (m1 - x);
            out.vol = f.sigma_star * x * (1.0 + f.kappa_v * cv);
            break;
        case CoefficientVariant::ratio_drift:
            out.drift = f.mu_star * x * (1.0 + f.kappa * (m1 / x - 1.0));
            out.vol = f.sigma_star * x;
            break;
        case CoefficientVariant::penalized_drift:
            out.drift = f.mu_star * x - f.lambda * x * cv * cv;
            out.vol = f.sigma_star * x;
            break;
        case CoefficientVariant::quadratic_vol: {
            const double dev = (m1 - x) / (m1 + f.eps);
            out.drift = f.mu_star * x;
            out.vol = f.sigma_star * x * std::sqrt(1.0 + f.kappa * dev * dev);
            break;
        }
    }
    return out;
}

CoefficientVariant variant_from_string(const std::string& name) {
    if (name == "baseline") return CoefficientVariant::baseline;
    if (name == "mean_revert") return CoefficientVariant::mean_revert;
    if (name == "cv_vol") return CoefficientVariant::cv_vol;
    if (name == "combined") return CoefficientVariant::combined;
    if (name == "ratio_drift") return CoefficientVariant::ratio_drift;
    if (name == "penalized_drift") return CoefficientVariant::penalized_drift;
    if (name == "quadratic_vol") return CoefficientVariant::quadratic_vol;
    throw std::invalid_argument("unknown coefficient variant: " + name);
}

std::string variant_to_string(CoefficientVariant variant) {
    switch (variant) {
        case CoefficientVariant::baseline: return "baseline";
        case CoefficientVariant::mean_revert: return "mean_revert";
        case CoefficientVariant::cv_vol: return "cv_vol";
        case CoefficientVariant::combined: return "combined";
        case CoefficientVariant::ratio_drift: return "ratio_drift";
        case CoefficientVariant::penalized_drift: return "penalized_drift";
        case CoefficientVariant::quadratic_vol: return "quadratic_vol";
    }
    throw std::invalid_argument("unknown coefficient variant enum value");
}

}  // namespace beliefsim

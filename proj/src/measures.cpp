#include "beliefsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace beliefsim {

namespace {

std::vector<double> cumulative_of(const std::vector<double>& weights) {
    std::vector<double> cum(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        cum[i] = acc;
    }
    if (!cum.empty()) cum.back() = 1.0;
    return cum;
}

// All interior cumulative levels of a set of measures, sorted and deduplicated,
// with 0 and 1 added. Consecutive entries delimit segments on which every
// quantile function involved is constant.
std::vector<double> merged_levels(const std::vector<const DiscreteMeasure1D*>& ms) {
    std::vector<double> levels;
    levels.push_back(0.0);
    levels.push_back(1.0);
    for (const auto* m : ms) {
        const auto& cum = m->cumulative();
        for (std::size_t i = 0; i + 1 < cum.size(); ++i) levels.push_back(cum[i]);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

}  // namespace

DiscreteMeasure1D::DiscreteMeasure1D(std::vector<double> atoms, std::vector<double> weights) {
    if (atoms.size() != weights.size())
        throw std::invalid_argument("DiscreteMeasure1D: atom/weight size mismatch");
    if (atoms.empty()) throw std::invalid_argument("DiscreteMeasure1D: empty measure");
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!std::isfinite(atoms[i]))
            throw std::invalid_argument("DiscreteMeasure1D: non-finite atom");
        if (!(weights[i] >= 0.0))
            throw std::invalid_argument("DiscreteMeasure1D: negative weight");
        total += weights[i];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("DiscreteMeasure1D: weights must sum to 1 within 1e-12");

    std::vector<std::size_t> order(atoms.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });

    for (std::size_t idx : order) {
        const double a = atoms[idx];
        const double w = weights[idx] / total;
        if (w == 0.0) continue;
        if (!atoms_.empty() && atoms_.back() == a)
            weights_.back() += w;
        else {
            atoms_.push_back(a);
            weights_.push_back(w);
        }
    }
    if (atoms_.empty())
        throw std::invalid_argument("DiscreteMeasure1D: all weights vanish");
    cumulative_ = cumulative_of(weights_);
}

DiscreteMeasure1D DiscreteMeasure1D::dirac(double x) {
    return DiscreteMeasure1D({x}, {1.0});
}

double DiscreteMeasure1D::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) m += weights_[i] * atoms_[i];
    return m;
}

double DiscreteMeasure1D::variance() const {
    const double m = mean();
    double v = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        v += weights_[i] * (atoms_[i] - m) * (atoms_[i] - m);
    return v;
}

double DiscreteMeasure1D::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0))
        throw std::invalid_argument("DiscreteMeasure1D::quantile: u must be in (0, 1)");
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end() - 1, u);
    return atoms_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double w2_discrete(const DiscreteMeasure1D& mu, const DiscreteMeasure1D& nu) {
    const auto levels = merged_levels({&mu, &nu});
    double cost = 0.0;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        const double mass = levels[k + 1] - levels[k];
        if (mass <= 0.0) continue;
        const double mid = 0.5 * (levels[k] + levels[k + 1]);
        const double d = mu.quantile(mid) - nu.quantile(mid);
        cost += mass * d * d;
    }
    return std::sqrt(cost);
}

DiscreteMeasure1D w2_barycenter_1d(const std::vector<DiscreteMeasure1D>& measures,
                                   const std::vector<double>& weights) {
    if (measures.empty() || measures.size() != weights.size())
        throw std::invalid_argument("w2_barycenter_1d: measure/weight size mismatch");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0))
            throw std::invalid_argument("w2_barycenter_1d: weights must be strictly positive");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("w2_barycenter_1d: weights must sum to 1 within 1e-12");

    std::vector<const DiscreteMeasure1D*> ptrs;
    ptrs.reserve(measures.size());
    for (const auto& m : measures) ptrs.push_back(&m);
    const auto levels = merged_levels(ptrs);

    std::vector<double> atoms, masses;
    atoms.reserve(levels.size());
    masses.reserve(levels.size());
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        const double mass = levels[k + 1] - levels[k];
        if (mass <= 0.0) continue;
        const double mid = 0.5 * (levels[k] + levels[k + 1]);
        double q = 0.0;
        for (std::size_t i = 0; i < measures.size(); ++i)
            q += weights[i] * measures[i].quantile(mid);
        atoms.push_back(q / total);
        masses.push_back(mass);
    }
    return DiscreteMeasure1D(std::move(atoms), std::move(masses));
}

double w2_to_dirac(const DiscreteMeasure1D& mu, double z) {
    const double d = mu.mean() - z;
    return mu.variance() + d * d;
}

double kl_discrete(const DiscreteMeasure1D& mu, const DiscreteMeasure1D& nu) {
    const auto& ma = mu.atoms();
    const auto& mw = mu.weights();
    const auto& na = nu.atoms();
    const auto& nw = nu.weights();
    double kl = 0.0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (mw[i] == 0.0) continue;
        while (j < na.size() && na[j] < ma[i]) ++j;
        if (j >= na.size() || na[j] != ma[i] || nw[j] <= 0.0)
            return std::numeric_limits<double>::infinity();
        kl += mw[i] * std::log(mw[i] / nw[j]);
    }
    return kl;
}

}  // namespace beliefsim

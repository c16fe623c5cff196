#pragma once

#include <cstddef>
#include <vector>

namespace beliefsim {

// Finitely supported probability measure on the line. Atoms are kept sorted
// and strictly increasing; duplicate atoms are merged and zero-weight atoms
// dropped at construction. Weights must be nonnegative and sum to 1 within
// 1e-12 (they are renormalized exactly afterwards).
class DiscreteMeasure1D {
public:
    DiscreteMeasure1D(std::vector<double> atoms, std::vector<double> weights);

    static DiscreteMeasure1D dirac(double x);

    const std::vector<double>& atoms() const { return atoms_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return atoms_.size(); }

    double mean() const;
    double variance() const;

    // Cumulative weights; entry i is the mass at or below atom i, and the
    // final entry is exactly 1.
    const std::vector<double>& cumulative() const { return cumulative_; }

    // Left-continuous quantile: the atom at level u in (0, 1).
    double quantile(double u) const;

private:
    std::vector<double> atoms_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
};

// 2-Wasserstein distance, computed exactly from the quantile coupling on the
// merged partition of cumulative weights.
double w2_discrete(const DiscreteMeasure1D& mu, const DiscreteMeasure1D& nu);

// Weighted 2-Wasserstein barycenter: the quantile average. Weights must be
// strictly positive and sum to 1.
DiscreteMeasure1D w2_barycenter_1d(const std::vector<DiscreteMeasure1D>& measures,
                                   const std::vector<double>& weights);

// Squared distance to a point mass: Var(mu) + (mean(mu) - z)^2.
double w2_to_dirac(const DiscreteMeasure1D& mu, double z);

// Discrete KL divergence sum m_i log(m_i / p_i) over the atoms of mu, with
// the 0 log 0 = 0 convention. A support violation yields +infinity rather
// than an exception.
double kl_discrete(const DiscreteMeasure1D& mu, const DiscreteMeasure1D& nu);

}  // namespace beliefsim

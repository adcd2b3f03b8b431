#pragma once

#include <limits>
#include <span>
#include <vector>

#include "kort/dyadic.hpp"

namespace kort {

/// Homogeneous Besov norm descriptor. p and r live in [1, inf]; infinity is
/// encoded as std::numeric_limits<double>::infinity().
struct BesovParams {
    double s = 0.0;
    double p = 2.0;
    double r = 1.0;

    static constexpr double inf = std::numeric_limits<double>::infinity();
    bool valid() const { return p >= 1.0 && r >= 1.0; }
};

/// Grid-quadrature L^p norm of a block (physical values, spacing^dim weights;
/// p = inf is the max). Vector/tensor inputs use the pointwise Euclidean
/// magnitude.
double block_lp_norm(const ScalarField& f, double p);
double block_lp_norm(const VectorField& f, double p);
double block_lp_norm(const TensorField& f, double p);

/// Per-block L^p norms over j in [j_min, j_max]. For p = 2 the values are
/// computed directly from spectral shell sums (Parseval), avoiding the
/// per-block transforms.
std::vector<double> block_norms(const ScalarField& f, const DyadicPartition& lp, double p);
std::vector<double> block_norms(const VectorField& f, const DyadicPartition& lp, double p);
std::vector<double> block_norms(const TensorField& f, const DyadicPartition& lp, double p);

/// || (2^{js} ||block_j u||_{L^p})_j ||_{l^r} over the partition's j-range.
double besov_norm(const ScalarField& f, const DyadicPartition& lp, const BesovParams& params);
double besov_norm(const VectorField& f, const DyadicPartition& lp, const BesovParams& params);
double besov_norm(const TensorField& f, const DyadicPartition& lp, const BesovParams& params);

/// l^r aggregation of weighted block norms (exposed for oracle tests).
double lr_aggregate(std::span<const double> weighted, double r);

enum class TimeExponent { l1, l2, linf };

/// Time aggregation of a sampled norm t -> ||f(t)||: trapezoidal quadrature
/// for L^1/L^2 (squared integrand for L^2), max over samples for L^inf.
/// Requires a uniform, nonempty time mesh; monotone nondecreasing in T.
double time_integrated_norm(std::span<const double> times, std::span<const double> norms,
                            TimeExponent exponent);

double time_integrated_norm(const std::vector<double>& times,
                            const std::vector<VectorField>& fields, const DyadicPartition& lp,
                            const BesovParams& params, TimeExponent exponent);
double time_integrated_norm(const std::vector<double>& times,
                            const std::vector<ScalarField>& fields, const DyadicPartition& lp,
                            const BesovParams& params, TimeExponent exponent);

} // namespace kort

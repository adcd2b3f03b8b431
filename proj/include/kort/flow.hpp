#pragma once

#include <vector>

#include "kort/besov.hpp"
#include "kort/field.hpp"

namespace kort {

/// Lagrangian flow map X(t, y) = y + d(t, y) on a uniform time mesh. The
/// displacement d is the running trapezoidal integral of the generating
/// velocity evaluated at the fixed label y (no characteristic tracing).
struct FlowMap {
    Grid grid;
    std::vector<double> times;
    std::vector<VectorField> displacement; // spectral, one per mesh time

    int index_of(double t) const;
    static void check_uniform(const std::vector<double>& times);
};

FlowMap build_flow(const std::vector<double>& times, const std::vector<VectorField>& velocity);

/// DX = I + Dd (spectral jacobian), A = DX^{-1} and J = det DX by pointwise
/// 2x2 closed forms, adjDX by the 2x2 cofactor formula. All fields physical.
/// Errors with "flow degenerate" when |det DX| < 0.1 anywhere.
struct JacobianData {
    TensorField DX;
    TensorField A;
    TensorField adjDX;
    ScalarField J;
};

JacobianData jacobian_data(const FlowMap& flow, int time_index);

/// Running integral of ||Dv(t)||_{B^{n/p}_{p,1}} against epsilon0. The
/// comparison is non-strict: hitting epsilon0 exactly is still ok.
struct SmallnessReport {
    bool ok = true;
    double exceeded_at = -1.0; // first mesh time where the integral exceeds epsilon0
    double integral = 0.0;     // value at the final time
    std::vector<double> running;
};

SmallnessReport smallness_check(const std::vector<double>& times,
                                const std::vector<VectorField>& velocity,
                                const DyadicPartition& lp, const BesovParams& high_params,
                                double epsilon0);

enum class ComposeDirection { forward, inverse };

/// Off-grid evaluation points, one per grid node (row-major).
struct PointSet {
    std::vector<double> x0;
    std::vector<double> x1;
};

/// Evaluate a band-limited field at arbitrary points by direct trigonometric
/// summation (exact interpolation for band-limited data, periodic wrap).
ScalarField evaluate_at_points(const ScalarField& f, const PointSet& pts);
VectorField evaluate_at_points(const VectorField& f, const PointSet& pts);

/// Grid nodes displaced forward: X(t, y) for every node y.
PointSet forward_points(const FlowMap& flow, int time_index);

/// X^{-1}(t, x) for every node x via the damped fixed point
/// y <- x - d(t, y) (undamped while contracting, damping 0.5 on detected
/// non-contraction). Errors after 200 sweeps with "flow not invertible at
/// tolerance" (the smallness regime is violated).
PointSet inverse_points(const FlowMap& flow, int time_index, double tol = 1e-10);

ScalarField compose_with_flow(const ScalarField& f, const FlowMap& flow, int time_index,
                              ComposeDirection dir);
VectorField compose_with_flow(const VectorField& f, const FlowMap& flow, int time_index,
                              ComposeDirection dir);

} // namespace kort

#pragma once

#include <vector>

#include "kort/besov.hpp"

namespace kort {

enum class Frame { lagrangian, eulerian };
enum class Scaling { original, unit_viscosity };

/// Time-indexed (u, grad P) pair on a uniform mesh.
struct Trajectory {
    std::vector<double> times;
    std::vector<VectorField> u;
    std::vector<VectorField> grad_p;
    Frame frame = Frame::lagrangian;
    Scaling scaling = Scaling::unit_viscosity;
};

/// Scalar companion (density along a run).
struct ScalarTrajectory {
    std::vector<double> times;
    std::vector<ScalarField> fields;
};

/// E-norm accounting:
///   value = ||u||_{Linf_t B^s} + ||dt u||_{L1_t B^s} + mu ||lap u||_{L1_t B^s}
///           + ||grad P||_{L1_t B^s}.
/// The time derivative is discrete: its L1-in-time contribution is the sum of
/// per-step increment norms ||u_{k+1} - u_k||. For p = 2 the second-gradient
/// norm equals the Laplacian norm (Parseval), which is what is computed.
struct EnergyNorm {
    double value = 0.0;
    double linf_u = 0.0;
    double l1_dtu = 0.0;
    double l1_lap_u = 0.0;
    double l1_gradp = 0.0;
};

EnergyNorm energy_norm(const Trajectory& traj, const DyadicPartition& lp,
                       const BesovParams& params, double mu = 1.0);

/// E-norm of the difference of two trajectories on the same mesh (streamed;
/// no full difference trajectory is materialized).
EnergyNorm energy_distance(const Trajectory& a, const Trajectory& b, const DyadicPartition& lp,
                           const BesovParams& params, double mu = 1.0);

/// Unit-viscosity rescaling u~(t, x) = u(t/mu_bar, x)/mu_bar: the stored mesh
/// becomes mu_bar * t, amplitudes scale by 1/mu_bar (velocity) and
/// 1/mu_bar^2 (pressure gradient); density values are unchanged (time axis
/// only). Round trip with the inverse map recovers the input to rounding.
Trajectory rescale_to_unit_viscosity(const Trajectory& traj, double mu_bar);
Trajectory pushforward_inverse_rescale(const Trajectory& traj, double mu_bar);
ScalarTrajectory rescale_to_unit_viscosity(const ScalarTrajectory& traj, double mu_bar);
ScalarTrajectory pushforward_inverse_rescale(const ScalarTrajectory& traj, double mu_bar);

} // namespace kort

#include "kort/trajectory.hpp"

#include "kort/common.hpp"
#include "kort/operators.hpp"

namespace kort {

namespace {

struct NormSeries {
    std::vector<double> u_norm, du_norm, lap_norm, gp_norm;
};

EnergyNorm aggregate(const NormSeries& s, const std::vector<double>& times, double mu) {
    EnergyNorm e;
    for (double v : s.u_norm) e.linf_u = std::max(e.linf_u, v);
    for (double v : s.du_norm) e.l1_dtu += v;
    e.l1_lap_u = mu * time_integrated_norm(times, s.lap_norm, TimeExponent::l1);
    e.l1_gradp = time_integrated_norm(times, s.gp_norm, TimeExponent::l1);
    e.value = e.linf_u + e.l1_dtu + e.l1_lap_u + e.l1_gradp;
    return e;
}

} // namespace

EnergyNorm energy_norm(const Trajectory& traj, const DyadicPartition& lp,
                       const BesovParams& params, double mu) {
    if (traj.times.empty() || traj.u.size() != traj.times.size())
        throw Error("energy_norm: empty or inconsistent trajectory");
    NormSeries s;
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        s.u_norm.push_back(besov_norm(traj.u[k], lp, params));
        s.lap_norm.push_back(besov_norm(laplacian(traj.u[k]), lp, params));
        s.gp_norm.push_back(besov_norm(traj.grad_p[k], lp, params));
        if (k > 0) s.du_norm.push_back(besov_norm(sub(traj.u[k], traj.u[k - 1]), lp, params));
    }
    return aggregate(s, traj.times, mu);
}

EnergyNorm energy_distance(const Trajectory& a, const Trajectory& b, const DyadicPartition& lp,
                           const BesovParams& params, double mu) {
    if (a.times.size() != b.times.size() || a.u.size() != b.u.size())
        throw Error("energy_distance: mesh mismatch");
    NormSeries s;
    VectorField prev_du;
    for (std::size_t k = 0; k < a.times.size(); ++k) {
        VectorField du = sub(a.u[k], b.u[k]);
        s.u_norm.push_back(besov_norm(du, lp, params));
        s.lap_norm.push_back(besov_norm(laplacian(du), lp, params));
        s.gp_norm.push_back(besov_norm(sub(a.grad_p[k], b.grad_p[k]), lp, params));
        if (k > 0) s.du_norm.push_back(besov_norm(sub(du, prev_du), lp, params));
        prev_du = std::move(du);
    }
    return aggregate(s, a.times, mu);
}

namespace {

Trajectory rescale_impl(const Trajectory& traj, double t_factor, double u_factor) {
    Trajectory out;
    out.frame = traj.frame;
    out.times.reserve(traj.times.size());
    for (double t : traj.times) out.times.push_back(t * t_factor);
    out.u.reserve(traj.u.size());
    for (const auto& f : traj.u) out.u.push_back(scaled(f, u_factor));
    out.grad_p.reserve(traj.grad_p.size());
    for (const auto& f : traj.grad_p) out.grad_p.push_back(scaled(f, u_factor * u_factor));
    return out;
}

} // namespace

Trajectory rescale_to_unit_viscosity(const Trajectory& traj, double mu_bar) {
    if (mu_bar <= 0.0) throw Error("rescale: mu_bar must be positive");
    if (traj.scaling != Scaling::original)
        throw Error("rescale_to_unit_viscosity: trajectory already unit-viscosity");
    Trajectory out = rescale_impl(traj, mu_bar, 1.0 / mu_bar);
    out.scaling = Scaling::unit_viscosity;
    return out;
}

Trajectory pushforward_inverse_rescale(const Trajectory& traj, double mu_bar) {
    if (mu_bar <= 0.0) throw Error("rescale: mu_bar must be positive");
    if (traj.scaling != Scaling::unit_viscosity)
        throw Error("pushforward_inverse_rescale: trajectory already in original scaling");
    Trajectory out = rescale_impl(traj, 1.0 / mu_bar, mu_bar);
    out.scaling = Scaling::original;
    return out;
}

ScalarTrajectory rescale_to_unit_viscosity(const ScalarTrajectory& traj, double mu_bar) {
    if (mu_bar <= 0.0) throw Error("rescale: mu_bar must be positive");
    ScalarTrajectory out = traj;
    for (double& t : out.times) t *= mu_bar;
    return out;
}

ScalarTrajectory pushforward_inverse_rescale(const ScalarTrajectory& traj, double mu_bar) {
    if (mu_bar <= 0.0) throw Error("rescale: mu_bar must be positive");
    ScalarTrajectory out = traj;
    for (double& t : out.times) t /= mu_bar;
    return out;
}

} // namespace kort

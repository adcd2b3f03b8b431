#include "kort/flow.hpp"

#include <cmath>

#include "kort/common.hpp"
#include "kort/fft.hpp"
#include "kort/operators.hpp"

namespace kort {

void FlowMap::check_uniform(const std::vector<double>& times) {
    if (times.size() < 2) throw Error("flow: need at least two mesh times");
    const double dt = times[1] - times[0];
    if (dt <= 0.0) throw Error("flow: non-increasing mesh");
    for (std::size_t k = 1; k + 1 < times.size(); ++k) {
        const double step = times[k + 1] - times[k];
        if (std::abs(step - dt) > 1e-12 * std::max(1.0, std::abs(dt)))
            throw Error("flow: non-uniform mesh");
    }
}

int FlowMap::index_of(double t) const {
    const double dt = times[1] - times[0];
    const int k = static_cast<int>(std::llround((t - times.front()) / dt));
    if (k < 0 || k >= static_cast<int>(times.size()) ||
        std::abs(times[static_cast<std::size_t>(k)] - t) > 1e-9 * std::max(1.0, std::abs(t)))
        throw Error("flow: time not on mesh");
    return k;
}

FlowMap build_flow(const std::vector<double>& times, const std::vector<VectorField>& velocity) {
    FlowMap::check_uniform(times);
    if (velocity.size() != times.size()) throw Error("build_flow: velocity/mesh size mismatch");
    FlowMap flow;
    flow.grid = velocity.front().grid();
    flow.times = times;
    flow.displacement.reserve(times.size());

    VectorField d = convert(VectorField::zeros(flow.grid, Representation::physical),
                            Representation::spectral);
    flow.displacement.push_back(d);
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double dt = times[k + 1] - times[k];
        VectorField vk = convert(velocity[k], Representation::spectral);
        VectorField vk1 = convert(velocity[k + 1], Representation::spectral);
        d = add(d, scaled(add(vk, vk1), 0.5 * dt));
        flow.displacement.push_back(d);
    }
    return flow;
}

JacobianData jacobian_data(const FlowMap& flow, int time_index) {
    if (time_index < 0 || time_index >= static_cast<int>(flow.times.size()))
        throw Error("jacobian_data: time index off mesh");
    const Grid& g = flow.grid;
    const VectorField& d = flow.displacement[static_cast<std::size_t>(time_index)];

    TensorField dx = convert(jacobian(d), Representation::physical);
    for (std::size_t i = 0; i < dx.entry(0, 0).size(); ++i) {
        dx.entry(0, 0)[i] += 1.0;
        dx.entry(1, 1)[i] += 1.0;
    }

    JacobianData out;
    out.DX = dx;
    out.A = TensorField::zeros(g, Representation::physical);
    out.adjDX = TensorField::zeros(g, Representation::physical);
    out.J = ScalarField::zeros(g, Representation::physical);

    for (std::size_t i = 0; i < out.J.size(); ++i) {
        const double a = dx.entry(0, 0)[i].real();
        const double b = dx.entry(0, 1)[i].real();
        const double c = dx.entry(1, 0)[i].real();
        const double e = dx.entry(1, 1)[i].real();
        const double det = a * e - b * c;
        if (std::abs(det) < 0.1) throw Error("jacobian_data: flow degenerate");
        out.J[i] = det;
        out.adjDX.entry(0, 0)[i] = e;
        out.adjDX.entry(0, 1)[i] = -b;
        out.adjDX.entry(1, 0)[i] = -c;
        out.adjDX.entry(1, 1)[i] = a;
        out.A.entry(0, 0)[i] = e / det;
        out.A.entry(0, 1)[i] = -b / det;
        out.A.entry(1, 0)[i] = -c / det;
        out.A.entry(1, 1)[i] = a / det;
    }
    return out;
}

SmallnessReport smallness_check(const std::vector<double>& times,
                                const std::vector<VectorField>& velocity,
                                const DyadicPartition& lp, const BesovParams& high_params,
                                double epsilon0) {
    if (velocity.size() != times.size()) throw Error("smallness_check: size mismatch");
    std::vector<double> norms;
    norms.reserve(velocity.size());
    for (const auto& v : velocity)
        norms.push_back(besov_norm(jacobian(v), lp, high_params));

    SmallnessReport rep;
    rep.running.assign(times.size(), 0.0);
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double dt = times[k + 1] - times[k];
        rep.running[k + 1] = rep.running[k] + 0.5 * dt * (norms[k] + norms[k + 1]);
        if (rep.ok && rep.running[k + 1] > epsilon0) {
            rep.ok = false;
            rep.exceeded_at = times[k + 1];
        }
    }
    rep.integral = rep.running.back();
    return rep;
}

namespace {

// Direct evaluation of sum_k f^(k) e^{i k.x} at arbitrary points. Phase
// factors along each axis are built by recurrence and shared between the
// components passed in one call.
void eval_fields(const std::vector<const ScalarField*>& fields, const PointSet& pts,
                 std::vector<std::vector<double>>& out) {
    const Grid& g = fields.front()->grid();
    const int n = g.n_points;
    const double cutoff = g.dealias_cutoff();
    const int kmax = static_cast<int>(cutoff); // modes |k| <= kmax survive dealiasing
    const int nk = 2 * kmax + 1;

    // spectral slot of wavenumber k (order -kmax..kmax along each axis)
    std::vector<int> slot(static_cast<std::size_t>(nk));
    for (int k = -kmax; k <= kmax; ++k) slot[static_cast<std::size_t>(k + kmax)] = (k + n) % n;

    const double scale = 1.0 / std::sqrt(static_cast<double>(g.point_count()));
    const std::size_t npts = pts.x0.size();

    std::vector<std::complex<double>> w0(static_cast<std::size_t>(nk));
    std::vector<std::complex<double>> w1(static_cast<std::size_t>(nk));
    std::vector<std::complex<double>> row(static_cast<std::size_t>(nk));

    out.assign(fields.size(), std::vector<double>(npts, 0.0));

    for (std::size_t p = 0; p < npts; ++p) {
        const std::complex<double> e0 = std::polar(1.0, pts.x0[p]);
        const std::complex<double> e1 = std::polar(1.0, pts.x1[p]);
        w0[static_cast<std::size_t>(kmax)] = {1.0, 0.0};
        w1[static_cast<std::size_t>(kmax)] = {1.0, 0.0};
        for (int k = 1; k <= kmax; ++k) {
            w0[static_cast<std::size_t>(kmax + k)] = w0[static_cast<std::size_t>(kmax + k - 1)] * e0;
            w0[static_cast<std::size_t>(kmax - k)] = std::conj(w0[static_cast<std::size_t>(kmax + k)]);
            w1[static_cast<std::size_t>(kmax + k)] = w1[static_cast<std::size_t>(kmax + k - 1)] * e1;
            w1[static_cast<std::size_t>(kmax - k)] = std::conj(w1[static_cast<std::size_t>(kmax + k)]);
        }
        for (std::size_t fi = 0; fi < fields.size(); ++fi) {
            const ScalarField& f = *fields[fi];
            for (int a = 0; a < nk; ++a) {
                const int i0 = slot[static_cast<std::size_t>(a)];
                std::complex<double> acc{0.0, 0.0};
                for (int b = 0; b < nk; ++b)
                    acc += f.at(i0, slot[static_cast<std::size_t>(b)]) * w1[static_cast<std::size_t>(b)];
                row[static_cast<std::size_t>(a)] = acc;
            }
            std::complex<double> val{0.0, 0.0};
            for (int a = 0; a < nk; ++a) val += w0[static_cast<std::size_t>(a)] * row[static_cast<std::size_t>(a)];
            out[fi][p] = val.real() * scale;
        }
    }
}

} // namespace

ScalarField evaluate_at_points(const ScalarField& f, const PointSet& pts) {
    ScalarField spec = dealias(convert(f, Representation::spectral));
    std::vector<std::vector<double>> vals;
    eval_fields({&spec}, pts, vals);
    ScalarField out = ScalarField::zeros(f.grid(), Representation::physical);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {vals[0][i], 0.0};
    return out;
}

VectorField evaluate_at_points(const VectorField& f, const PointSet& pts) {
    VectorField spec = dealias(convert(f, Representation::spectral));
    std::vector<const ScalarField*> parts;
    for (int c = 0; c < f.dim(); ++c) parts.push_back(&spec.component(c));
    std::vector<std::vector<double>> vals;
    eval_fields(parts, pts, vals);
    VectorField out = VectorField::zeros(f.grid(), Representation::physical);
    for (int c = 0; c < f.dim(); ++c)
        for (std::size_t i = 0; i < out.component(c).size(); ++i)
            out.component(c)[i] = {vals[static_cast<std::size_t>(c)][i], 0.0};
    return out;
}

PointSet forward_points(const FlowMap& flow, int time_index) {
    const Grid& g = flow.grid;
    const int n = g.n_points;
    const double h = g.spacing();
    VectorField d = convert(flow.displacement[static_cast<std::size_t>(time_index)],
                            Representation::physical);
    PointSet pts;
    pts.x0.resize(g.point_count());
    pts.x1.resize(g.point_count());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            pts.x0[idx] = i * h + d.component(0)[idx].real();
            pts.x1[idx] = j * h + d.component(1)[idx].real();
        }
    return pts;
}

PointSet inverse_points(const FlowMap& flow, int time_index, double tol) {
    const Grid& g = flow.grid;
    const int n = g.n_points;
    const double h = g.spacing();
    const VectorField& dspec = flow.displacement[static_cast<std::size_t>(time_index)];

    PointSet y; // iterate, seeded at the grid nodes x
    y.x0.resize(g.point_count());
    y.x1.resize(g.point_count());
    std::vector<double> tx0(g.point_count()), tx1(g.point_count());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            tx0[idx] = i * h;
            tx1[idx] = j * h;
            y.x0[idx] = tx0[idx];
            y.x1[idx] = tx1[idx];
        }

    double damping = 1.0;
    double prev_res = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < 200; ++sweep) {
        VectorField d_at_y = evaluate_at_points(dspec, y);
        double res = 0.0;
        for (std::size_t idx = 0; idx < y.x0.size(); ++idx) {
            const double r0 = y.x0[idx] + d_at_y.component(0)[idx].real() - tx0[idx];
            const double r1 = y.x1[idx] + d_at_y.component(1)[idx].real() - tx1[idx];
            res = std::max(res, std::max(std::abs(r0), std::abs(r1)));
            y.x0[idx] -= damping * r0;
            y.x1[idx] -= damping * r1;
        }
        if (res <= tol) return y;
        if (res > prev_res && damping > 0.49) damping = 0.5;
        prev_res = res;
    }
    throw Error("compose_with_flow: flow not invertible at tolerance");
}

ScalarField compose_with_flow(const ScalarField& f, const FlowMap& flow, int time_index,
                              ComposeDirection dir) {
    check_same_grid(f.grid(), flow.grid, "compose_with_flow");
    const PointSet pts = dir == ComposeDirection::forward ? forward_points(flow, time_index)
                                                          : inverse_points(flow, time_index);
    return evaluate_at_points(f, pts);
}

VectorField compose_with_flow(const VectorField& f, const FlowMap& flow, int time_index,
                              ComposeDirection dir) {
    check_same_grid(f.grid(), flow.grid, "compose_with_flow");
    const PointSet pts = dir == ComposeDirection::forward ? forward_points(flow, time_index)
                                                          : inverse_points(flow, time_index);
    return evaluate_at_points(f, pts);
}

} // namespace kort

#include "kort/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "kort/common.hpp"

namespace kort {

namespace {

// One forward/backward plan pair per grid size, created lazily. Plans are
// created with FFTW_ESTIMATE so planning never depends on runtime timings,
// and FFTW_UNALIGNED so the new-array execute below accepts any buffer.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;
std::map<int, PlanPair>& plan_cache() {
    static std::map<int, PlanPair> cache;
    return cache;
}

PlanPair get_plans(int n) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n) * n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair p;
    p.fwd = fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_2d(n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p.fwd || !p.bwd) throw Error("fft: plan creation failed");
    cache[n] = p;
    return p;
}

void transform_in_place(std::vector<std::complex<double>>& data, int n, bool forward) {
    PlanPair p = get_plans(n);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(forward ? p.fwd : p.bwd, buf, buf);
    const double scale = 1.0 / std::sqrt(static_cast<double>(data.size()));
    for (auto& z : data) z *= scale;
}

} // namespace

ScalarField convert(const ScalarField& f, Representation target) {
    if (f.representation() == target) return f;
    if (f.grid().dim != 2) throw Error("convert: 2-D transforms only");
    ScalarField out = f;
    transform_in_place(out.data(), f.grid().n_points, target == Representation::spectral);
    out.set_representation(target);
    if (target == Representation::physical) {
        // real field contract: drop the rounding-level imaginary residue
        for (auto& z : out.data()) z = {z.real(), 0.0};
    }
    return out;
}

VectorField convert(const VectorField& f, Representation target) {
    VectorField out = f;
    for (int c = 0; c < f.dim(); ++c) out.component(c) = convert(f.component(c), target);
    return out;
}

TensorField convert(const TensorField& f, Representation target) {
    TensorField out = f;
    for (int i = 0; i < f.dim(); ++i)
        for (int j = 0; j < f.dim(); ++j) out.entry(i, j) = convert(f.entry(i, j), target);
    return out;
}

double linf_norm(const ScalarField& a) {
    ScalarField p = convert(a, Representation::physical);
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i].real()));
    return m;
}

double linf_norm(const VectorField& a) {
    VectorField p = convert(a, Representation::physical);
    double m = 0.0;
    for (std::size_t i = 0; i < p.component(0).size(); ++i) {
        double s = 0.0;
        for (int c = 0; c < p.dim(); ++c) s += p.component(c)[i].real() * p.component(c)[i].real();
        m = std::max(m, s);
    }
    return std::sqrt(m);
}

double min_value(const ScalarField& a) {
    ScalarField p = convert(a, Representation::physical);
    double m = p[0].real();
    for (std::size_t i = 1; i < p.size(); ++i) m = std::min(m, p[i].real());
    return m;
}

double max_value(const ScalarField& a) {
    ScalarField p = convert(a, Representation::physical);
    double m = p[0].real();
    for (std::size_t i = 1; i < p.size(); ++i) m = std::max(m, p[i].real());
    return m;
}

} // namespace kort

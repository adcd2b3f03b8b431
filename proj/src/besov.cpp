#include "kort/besov.hpp"

#include <cmath>

#include "kort/common.hpp"
#include "kort/fft.hpp"

namespace kort {

namespace {

bool is_inf(double x) { return std::isinf(x); }

double lp_of_magnitudes(std::span<const double> mag2, double p, double weight) {
    // mag2 holds squared pointwise magnitudes; weight is spacing^dim
    if (is_inf(p)) {
        double m = 0.0;
        for (double v : mag2) m = std::max(m, v);
        return std::sqrt(m);
    }
    double s = 0.0;
    for (double v : mag2) s += std::pow(v, p / 2.0);
    return std::pow(s * weight, 1.0 / p);
}

template <typename FieldT>
std::vector<const ScalarField*> parts_of(const FieldT& f);

template <>
std::vector<const ScalarField*> parts_of(const ScalarField& f) {
    return {&f};
}
template <>
std::vector<const ScalarField*> parts_of(const VectorField& f) {
    std::vector<const ScalarField*> p;
    for (int c = 0; c < f.dim(); ++c) p.push_back(&f.component(c));
    return p;
}
template <>
std::vector<const ScalarField*> parts_of(const TensorField& f) {
    std::vector<const ScalarField*> p;
    for (int i = 0; i < f.dim(); ++i)
        for (int j = 0; j < f.dim(); ++j) p.push_back(&f.entry(i, j));
    return p;
}

template <typename FieldT>
double block_lp_norm_impl(const FieldT& f, double p) {
    FieldT phys = convert(f, Representation::physical);
    auto parts = parts_of(phys);
    const std::size_t m = parts.front()->size();
    std::vector<double> mag2(m, 0.0);
    for (const ScalarField* part : parts)
        for (std::size_t i = 0; i < m; ++i) mag2[i] += (*part)[i].real() * (*part)[i].real();
    const double w = std::pow(parts.front()->grid().spacing(), parts.front()->grid().dim);
    return lp_of_magnitudes(mag2, p, w);
}

// p = 2 shortcut: block L2 norms from spectral shell sums, one pass
template <typename FieldT>
std::vector<double> block_l2_spectral(const FieldT& f, const DyadicPartition& lp) {
    FieldT spec = convert(f, Representation::spectral);
    auto parts = parts_of(spec);
    const Grid& g = parts.front()->grid();
    const double w = std::pow(g.spacing(), g.dim);
    std::vector<double> out(static_cast<std::size_t>(lp.block_count()), 0.0);
    for (int j = lp.j_min(); j <= lp.j_max(); ++j) {
        const auto& tab = lp.phi_table(j);
        double s = 0.0;
        for (const ScalarField* part : parts)
            for (std::size_t i = 0; i < part->size(); ++i) {
                const double t = tab[i];
                if (t != 0.0) s += t * t * std::norm((*part)[i]);
            }
        out[static_cast<std::size_t>(j - lp.j_min())] = std::sqrt(s * w);
    }
    return out;
}

template <typename FieldT>
std::vector<double> block_norms_impl(const FieldT& f, const DyadicPartition& lp, double p) {
    if (p == 2.0) return block_l2_spectral(f, lp);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(lp.block_count()));
    for (int j = lp.j_min(); j <= lp.j_max(); ++j)
        out.push_back(block_lp_norm_impl(lp.block(f, j), p));
    return out;
}

template <typename FieldT>
double besov_norm_impl(const FieldT& f, const DyadicPartition& lp, const BesovParams& params) {
    if (!params.valid()) throw Error("besov_norm: p, r must be >= 1");
    std::vector<double> norms = block_norms_impl(f, lp, params.p);
    std::vector<double> weighted(norms.size());
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const int j = lp.j_min() + static_cast<int>(i);
        weighted[i] = std::exp2(j * params.s) * norms[i];
    }
    return lr_aggregate(weighted, params.r);
}

} // namespace

double block_lp_norm(const ScalarField& f, double p) { return block_lp_norm_impl(f, p); }
double block_lp_norm(const VectorField& f, double p) { return block_lp_norm_impl(f, p); }
double block_lp_norm(const TensorField& f, double p) { return block_lp_norm_impl(f, p); }

std::vector<double> block_norms(const ScalarField& f, const DyadicPartition& lp, double p) {
    return block_norms_impl(f, lp, p);
}
std::vector<double> block_norms(const VectorField& f, const DyadicPartition& lp, double p) {
    return block_norms_impl(f, lp, p);
}
std::vector<double> block_norms(const TensorField& f, const DyadicPartition& lp, double p) {
    return block_norms_impl(f, lp, p);
}

double besov_norm(const ScalarField& f, const DyadicPartition& lp, const BesovParams& params) {
    return besov_norm_impl(f, lp, params);
}
double besov_norm(const VectorField& f, const DyadicPartition& lp, const BesovParams& params) {
    return besov_norm_impl(f, lp, params);
}
double besov_norm(const TensorField& f, const DyadicPartition& lp, const BesovParams& params) {
    return besov_norm_impl(f, lp, params);
}

double lr_aggregate(std::span<const double> weighted, double r) {
    if (is_inf(r)) {
        double m = 0.0;
        for (double v : weighted) m = std::max(m, v);
        return m;
    }
    if (r == 1.0) {
        double s = 0.0;
        for (double v : weighted) s += v;
        return s;
    }
    double s = 0.0;
    for (double v : weighted) s += std::pow(v, r);
    return std::pow(s, 1.0 / r);
}

double time_integrated_norm(std::span<const double> times, std::span<const double> norms,
                            TimeExponent exponent) {
    if (times.empty() || norms.size() != times.size())
        throw Error("time_integrated_norm: empty or mismatched trajectory");
    if (exponent == TimeExponent::linf) {
        double m = 0.0;
        for (double v : norms) m = std::max(m, v);
        return m;
    }
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double dt = times[k + 1] - times[k];
        const double a = exponent == TimeExponent::l1 ? norms[k] : norms[k] * norms[k];
        const double b = exponent == TimeExponent::l1 ? norms[k + 1] : norms[k + 1] * norms[k + 1];
        s += 0.5 * dt * (a + b);
    }
    return exponent == TimeExponent::l1 ? s : std::sqrt(s);
}

double time_integrated_norm(const std::vector<double>& times,
                            const std::vector<VectorField>& fields, const DyadicPartition& lp,
                            const BesovParams& params, TimeExponent exponent) {
    if (fields.empty()) throw Error("time_integrated_norm: empty trajectory");
    std::vector<double> norms;
    norms.reserve(fields.size());
    for (const auto& f : fields) norms.push_back(besov_norm(f, lp, params));
    return time_integrated_norm(times, norms, exponent);
}

double time_integrated_norm(const std::vector<double>& times,
                            const std::vector<ScalarField>& fields, const DyadicPartition& lp,
                            const BesovParams& params, TimeExponent exponent) {
    if (fields.empty()) throw Error("time_integrated_norm: empty trajectory");
    std::vector<double> norms;
    norms.reserve(fields.size());
    for (const auto& f : fields) norms.push_back(besov_norm(f, lp, params));
    return time_integrated_norm(times, norms, exponent);
}

} // namespace kort

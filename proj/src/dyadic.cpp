#include "kort/dyadic.hpp"

#include <cmath>

#include "kort/common.hpp"
#include "kort/fft.hpp"

namespace kort {

namespace {

// smooth step: 1 at theta <= 0, 0 at theta >= 1, strictly decreasing between
double smooth_step_down(double theta) {
    if (theta <= 0.0) return 1.0;
    if (theta >= 1.0) return 0.0;
    auto f = [](double s) { return std::exp(-1.0 / s); };
    return f(1.0 - theta) / (f(1.0 - theta) + f(theta));
}

int int_log2(int n) {
    int p = 0;
    while ((1 << p) < n) ++p;
    return p;
}

} // namespace

double DyadicPartition::chi(double r) {
    constexpr double lo = 0.75;      // == 1 inside
    constexpr double hi = 4.0 / 3.0; // == 0 outside
    return smooth_step_down((r - lo) / (hi - lo));
}

DyadicPartition::DyadicPartition(const Grid& grid) : grid_(grid) {
    if (grid.dim != 2) throw Error("DyadicPartition: 2-D only");
    j_min_ = -2;
    j_max_ = int_log2(grid.n_points / 2) + 1;

    const int n = grid.n_points;
    const std::size_t m = grid.point_count();

    // chi(2^-j |xi|) for j in [j_min-1, j_max+1]
    for (int j = j_min_ - 1; j <= j_max_ + 1; ++j) {
        std::vector<double> tab(m);
        const double scale = std::ldexp(1.0, -j); // 2^-j
        for (int i = 0; i < n; ++i) {
            const double k0 = grid.wavenumber(i);
            for (int jj = 0; jj < n; ++jj) {
                const double k1 = grid.wavenumber(jj);
                const double r = std::sqrt(k0 * k0 + k1 * k1);
                tab[static_cast<std::size_t>(i) * n + jj] = chi(r * scale);
            }
        }
        chi_tables_.push_back(std::move(tab));
    }

    // phi_j = chi_{j+1} - chi_j, elementwise, so partition sums telescope
    for (int j = j_min_; j <= j_max_; ++j) {
        const auto& lo = chi_table(j);
        const auto& hi = chi_table(j + 1);
        std::vector<double> tab(m);
        for (std::size_t i = 0; i < m; ++i) tab[i] = hi[i] - lo[i];
        phi_tables_.push_back(std::move(tab));
    }
}

const std::vector<double>& DyadicPartition::chi_table(int j) const {
    if (j < j_min_ - 1 || j > j_max_ + 1) throw Error("DyadicPartition: chi index out of range");
    return chi_tables_[static_cast<std::size_t>(j - (j_min_ - 1))];
}

const std::vector<double>& DyadicPartition::phi_table(int j) const {
    if (j < j_min_ || j > j_max_) throw Error("DyadicPartition: block index out of range");
    return phi_tables_[static_cast<std::size_t>(j - j_min_)];
}

ScalarField DyadicPartition::block(const ScalarField& u, int j) const {
    check_same_grid(u.grid(), grid_, "dyadic_block");
    const auto& tab = phi_table(j);
    ScalarField s = convert(u, Representation::spectral);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] *= tab[i];
    return s;
}

VectorField DyadicPartition::block(const VectorField& u, int j) const {
    VectorField out = u;
    for (int c = 0; c < u.dim(); ++c) out.component(c) = block(u.component(c), j);
    return out;
}

TensorField DyadicPartition::block(const TensorField& u, int j) const {
    TensorField out = u;
    for (int i = 0; i < u.dim(); ++i)
        for (int c = 0; c < u.dim(); ++c) out.entry(i, c) = block(u.entry(i, c), j);
    return out;
}

ScalarField DyadicPartition::lowpass(const ScalarField& u, int j) const {
    check_same_grid(u.grid(), grid_, "lowpass");
    const auto& tab = chi_table(j);
    ScalarField s = convert(u, Representation::spectral);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] *= tab[i];
    return s;
}

} // namespace kort

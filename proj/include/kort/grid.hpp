#pragma once

#include <cstddef>
#include <numbers>

namespace kort {

/// Uniform collocation grid on the periodic torus [0, 2*pi)^dim.
///
/// n_points must be a power of two (>= 8) so that spacing() * n_points
/// reproduces length exactly in IEEE arithmetic. dim == 2 is the supported
/// configuration; dim == 3 is accepted by the container types but the
/// transform and derivative kernels are two-dimensional.
struct Grid {
    int n_points = 0;
    int dim = 2;
    double length = 2.0 * std::numbers::pi;

    double spacing() const { return length / n_points; }

    std::size_t point_count() const {
        std::size_t m = 1;
        for (int d = 0; d < dim; ++d) m *= static_cast<std::size_t>(n_points);
        return m;
    }

    /// Integer wavenumber of FFT slot i, in [-n/2, n/2).
    int wavenumber(int index) const {
        return index <= n_points / 2 - 1 ? index : index - n_points;
    }

    /// Per-component dealias cutoff of the 2/3 rule: modes with any
    /// |k_component| above this are discarded after pointwise products.
    double dealias_cutoff() const { return (2.0 / 3.0) * (n_points / 2.0); }

    bool operator==(const Grid&) const = default;
};

Grid make_grid(int n_points, int dim = 2);

} // namespace kort

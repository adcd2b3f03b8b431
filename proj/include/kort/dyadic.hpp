#pragma once

#include <vector>

#include "kort/field.hpp"

namespace kort {

/// Discrete Littlewood-Paley partition on the integer frequency lattice.
///
/// chi is a C^inf radial cutoff equal to 1 on |xi| <= 3/4, vanishing for
/// |xi| >= 4/3, radially nonincreasing, built from the standard
/// exp(-1/(1-t^2))-type mollifier. phi(xi) = chi(xi/2) - chi(xi) is supported
/// in the annulus 3/4 <= |xi| <= 8/3 and the shifted family phi(2^-j xi)
/// partitions unity over every resolvable nonzero frequency for
/// j in [j_min, j_max] with j_min = -2, j_max = log2(n_points/2) + 1.
///
/// Block multiplier tables are evaluated once per grid; the phi tables are
/// stored as differences of chi tables so the partition sum telescopes
/// exactly in floating point.
class DyadicPartition {
  public:
    explicit DyadicPartition(const Grid& grid);

    const Grid& grid() const { return grid_; }
    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    int block_count() const { return j_max_ - j_min_ + 1; }

    /// Profile evaluators (arguments are |xi| radii).
    static double chi(double r);
    static double phi(double r) { return chi(r / 2.0) - chi(r); }

    /// Per-mode multiplier tables, indexed like the spectral data.
    const std::vector<double>& phi_table(int j) const;
    const std::vector<double>& chi_table(int j) const; // valid for j in [j_min-1, j_max+1]

    /// Dyadic block: F^-1(phi(2^-j xi) u^(xi)). Errors on out-of-range j.
    ScalarField block(const ScalarField& u, int j) const;
    VectorField block(const VectorField& u, int j) const;
    TensorField block(const TensorField& u, int j) const;

    /// Low-pass S_j = chi(2^-j D); includes the mean mode (chi(0) = 1).
    ScalarField lowpass(const ScalarField& u, int j) const;

  private:
    Grid grid_;
    int j_min_ = 0;
    int j_max_ = 0;
    // chi tables for j in [j_min-1, j_max+1]; phi tables for [j_min, j_max]
    std::vector<std::vector<double>> chi_tables_;
    std::vector<std::vector<double>> phi_tables_;
};

} // namespace kort

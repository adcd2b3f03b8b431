#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "kort/grid.hpp"

namespace kort {

enum class Representation { physical, spectral };

/// Real scalar field on a periodic grid, stored either as collocation values
/// (physical) or as complex Fourier coefficients (spectral). One complex
/// buffer backs both representations; in the physical one the imaginary parts
/// are identically zero.
///
/// The transform pair is unitary: both directions carry a 1/sqrt(point_count)
/// factor, so the l2 sum of coefficients equals the l2 sum of grid values and
/// the quadrature-weighted L2 norm agrees between representations.
///
/// Fields are value types; every operation in the library returns a new field
/// and never mutates its inputs, so sharing across threads needs no locking.
class ScalarField {
  public:
    ScalarField() = default;

    static ScalarField zeros(const Grid& grid, Representation rep = Representation::physical);

    /// Physical field sampled from a function of the coordinates (2-D).
    static ScalarField from_function(const Grid& grid,
                                     const std::function<double(double, double)>& f);

    const Grid& grid() const { return grid_; }
    Representation representation() const { return rep_; }
    std::size_t size() const { return data_.size(); }

    std::complex<double>& operator[](std::size_t i) { return data_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return data_[i]; }

    /// 2-D index accessors, row-major: (i, j) -> i * n + j.
    std::complex<double>& at(int i, int j) {
        return data_[static_cast<std::size_t>(i) * grid_.n_points + j];
    }
    const std::complex<double>& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * grid_.n_points + j];
    }

    std::vector<std::complex<double>>& data() { return data_; }
    const std::vector<std::complex<double>>& data() const { return data_; }

    void set_representation(Representation rep) { rep_ = rep; }

  private:
    Grid grid_;
    Representation rep_ = Representation::physical;
    std::vector<std::complex<double>> data_;
};

/// dim scalar components sharing one grid and one representation.
class VectorField {
  public:
    VectorField() = default;

    static VectorField zeros(const Grid& grid, Representation rep = Representation::physical);

    int dim() const { return static_cast<int>(comps_.size()); }
    const Grid& grid() const { return comps_.at(0).grid(); }
    Representation representation() const { return comps_.at(0).representation(); }

    ScalarField& component(int c) { return comps_.at(c); }
    const ScalarField& component(int c) const { return comps_.at(c); }

  private:
    std::vector<ScalarField> comps_;
};

/// dim x dim scalar entries sharing one grid. entry(i, j) is row i, column j.
class TensorField {
  public:
    TensorField() = default;

    static TensorField zeros(const Grid& grid, Representation rep = Representation::physical);

    int dim() const { return dim_; }
    const Grid& grid() const { return entries_.at(0).grid(); }
    Representation representation() const { return entries_.at(0).representation(); }

    ScalarField& entry(int i, int j) { return entries_.at(static_cast<std::size_t>(i) * dim_ + j); }
    const ScalarField& entry(int i, int j) const {
        return entries_.at(static_cast<std::size_t>(i) * dim_ + j);
    }

  private:
    int dim_ = 0;
    std::vector<ScalarField> entries_;
};

// ---- arithmetic (pure, representation-preserving, grids must match) ----

ScalarField add(const ScalarField& a, const ScalarField& b);
ScalarField sub(const ScalarField& a, const ScalarField& b);
ScalarField scaled(const ScalarField& a, double s);
VectorField add(const VectorField& a, const VectorField& b);
VectorField sub(const VectorField& a, const VectorField& b);
VectorField scaled(const VectorField& a, double s);
TensorField add(const TensorField& a, const TensorField& b);
TensorField sub(const TensorField& a, const TensorField& b);
TensorField scaled(const TensorField& a, double s);
TensorField transpose(const TensorField& a);

// ---- reductions ----

/// Mean of a real field (representation-agnostic).
double mean(const ScalarField& a);

/// Quadrature-weighted L2 norm, sqrt(sum |f|^2 * spacing^dim). By unitarity
/// the same value is obtained in either representation.
double l2_norm(const ScalarField& a);
double l2_norm(const VectorField& a);
double l2_norm(const TensorField& a);

/// Max absolute grid value (converts to physical if needed). For vectors the
/// pointwise Euclidean magnitude is used.
double linf_norm(const ScalarField& a);
double linf_norm(const VectorField& a);

double min_value(const ScalarField& a);
double max_value(const ScalarField& a);

void check_same_grid(const Grid& a, const Grid& b, const char* where);

} // namespace kort

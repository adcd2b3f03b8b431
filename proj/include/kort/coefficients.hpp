#pragma once

#include <vector>

#include "kort/field.hpp"

namespace kort {

/// Smooth coefficient function declared as a polynomial in (rho - 1), so the
/// normalization value(1) = 1 is structural:
///   value(rho) = 1 + sum_m coeffs[m] * (rho - 1)^(m+1).
class SmoothFn {
  public:
    SmoothFn() = default;
    explicit SmoothFn(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

    double operator()(double rho) const;

    /// Pointwise application with dealiasing, physical result.
    ScalarField apply(const ScalarField& rho) const;

    bool is_constant_one() const;
    const std::vector<double>& coeffs() const { return coeffs_; }

  private:
    std::vector<double> coeffs_;
};

/// Physical coefficients of the capillary system: viscosity scale mu_bar,
/// capillarity scale kappa_bar, the normalized coefficient functions, and the
/// initial density with its positivity floor.
struct Coefficients {
    double mu_bar = 1.0;
    double kappa_bar = 0.0;
    SmoothFn mu_fn;
    SmoothFn k_fn;
    ScalarField rho0;
    double rho_floor = 0.1;

    double kappa_over_mu2() const { return kappa_bar / (mu_bar * mu_bar); }

    /// Enforces mu_bar > 0, kappa_bar >= 0, inf rho0 >= rho_floor > 0.
    void validate() const;
};

} // namespace kort

#pragma once

#include "kort/coefficients.hpp"
#include "kort/flow.hpp"

namespace kort {

/// D_B(z) = Dz * B + (Dz * B)^T for a matrix field B. With B = I this is the
/// doubled symmetric gradient D(z).
TensorField deformation(const VectorField& z, const TensorField& b);

/// div[ mu(rho0) * A * D_A(w) ], the Lagrangian viscous operator. Pass
/// nullptr for A (identity) or mu_of_rho0 (constant 1) to degenerate.
VectorField lagrangian_viscous_term(const VectorField& w, const TensorField* a,
                                    const ScalarField* mu_of_rho0);

/// Eulerian-form capillary force
///   -(kappa/mu^2) * [1/rho] * div[ k(rho) grad(rho) tensor grad(rho) ],
/// the 1/rho factor applied when divide_by_rho is set (the F-family carries
/// it, the H-family does not).
VectorField eulerian_capillary_force(const ScalarField& rho, const SmoothFn& k_fn,
                                     double kappa_over_mu2, bool divide_by_rho,
                                     double rho_floor);

/// Lagrangian capillary forcing
///   -(kappa/mu^2) * [1/rho0] * div[ k(rho0) * A (tA grad rho0) tensor (tA grad rho0) ].
/// Exactly zero when kappa_over_mu2 == 0 (no assembly is performed).
VectorField lagrangian_capillary_term(const ScalarField& rho0, const JacobianData& jac,
                                      const SmoothFn& k_fn, double kappa_over_mu2,
                                      bool divide_by_rho0, double rho_floor);

/// M = (I - adjDX) w together with div M computed two ways: as the spectral
/// divergence of M and as the contraction Dw : (I - J A). The two agree up to
/// dealias truncation (the change-of-variables trace identity).
struct DivergenceConstraint {
    VectorField M;                // physical
    ScalarField divM_spectral;    // spectral div of M
    ScalarField divM_contraction; // sum_{im} (I - J A)_{im} d_i w_m
    double mismatch_l2 = 0.0;     // ||spectral - contraction||_2 / max(||spectral||_2, eps)
};

DivergenceConstraint divergence_constraint_term(const VectorField& w, const JacobianData& jac);

} // namespace kort

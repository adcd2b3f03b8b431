#include "kort/lagrangian_terms.hpp"

#include <cmath>

#include "kort/common.hpp"
#include "kort/fft.hpp"
#include "kort/operators.hpp"

namespace kort {

TensorField deformation(const VectorField& z, const TensorField& b) {
    TensorField dz = jacobian(z);
    TensorField dzb = matmul(convert(dz, Representation::physical), b);
    return add(dzb, transpose(dzb));
}

VectorField lagrangian_viscous_term(const VectorField& w, const TensorField* a,
                                    const ScalarField* mu_of_rho0) {
    if (a == nullptr) {
        // identity flow: keep the assembly purely spectral
        TensorField d = sym_double_gradient(w);
        if (mu_of_rho0 == nullptr) return divergence(d);
        return divergence(pmul(*mu_of_rho0, convert(d, Representation::physical)));
    }
    TensorField s = matmul(*a, deformation(w, *a));
    if (mu_of_rho0 != nullptr) s = pmul(*mu_of_rho0, s);
    return divergence(s);
}

namespace {

void require_floor(const ScalarField& rho, double rho_floor, const char* where) {
    if (min_value(rho) < rho_floor)
        throw Error(std::string(where) + ": density below positivity floor");
}

VectorField capillary_from_tensor(const ScalarField& rho, const SmoothFn& k_fn,
                                  const VectorField& b, const VectorField& a,
                                  double kappa_over_mu2, bool divide_by_rho) {
    TensorField t = outer(b, a);
    if (!k_fn.is_constant_one()) t = pmul(k_fn.apply(rho), t);
    VectorField f = scaled(divergence(t), -kappa_over_mu2);
    if (!divide_by_rho) return f;
    VectorField out = convert(f, Representation::physical);
    for (int c = 0; c < out.dim(); ++c) out.component(c) = pdiv(out.component(c), rho);
    return out;
}

} // namespace

VectorField eulerian_capillary_force(const ScalarField& rho, const SmoothFn& k_fn,
                                     double kappa_over_mu2, bool divide_by_rho,
                                     double rho_floor) {
    require_floor(rho, rho_floor, "eulerian_capillary_force");
    if (kappa_over_mu2 == 0.0)
        return VectorField::zeros(rho.grid(), Representation::spectral);
    ScalarField rp = convert(rho, Representation::physical);
    VectorField g = convert(gradient(rp), Representation::physical);
    return capillary_from_tensor(rp, k_fn, g, g, kappa_over_mu2, divide_by_rho);
}

VectorField lagrangian_capillary_term(const ScalarField& rho0, const JacobianData& jac,
                                      const SmoothFn& k_fn, double kappa_over_mu2,
                                      bool divide_by_rho0, double rho_floor) {
    require_floor(rho0, rho_floor, "lagrangian_capillary_term");
    if (kappa_over_mu2 == 0.0)
        return VectorField::zeros(rho0.grid(), Representation::spectral);
    ScalarField rp = convert(rho0, Representation::physical);
    VectorField g = convert(gradient(rp), Representation::physical);
    VectorField a = apply_matrix(transpose(jac.A), g); // tA grad(rho0)
    VectorField b = apply_matrix(jac.A, a);            // A (tA grad rho0); tensor is b x a
    return capillary_from_tensor(rp, k_fn, b, a, kappa_over_mu2, divide_by_rho0);
}

DivergenceConstraint divergence_constraint_term(const VectorField& w, const JacobianData& jac) {
    check_same_grid(w.grid(), jac.A.grid(), "divergence_constraint_term");
    VectorField wp = convert(w, Representation::physical);

    DivergenceConstraint out;
    out.M = sub(wp, apply_matrix(jac.adjDX, wp));
    out.divM_spectral = divergence(out.M);

    // Dw : (I - J A), contracting d_i w_m against entry (i, m)
    TensorField ja = pmul(jac.J, jac.A);
    TensorField b = scaled(ja, -1.0);
    for (std::size_t i = 0; i < b.entry(0, 0).size(); ++i) {
        b.entry(0, 0)[i] += 1.0;
        b.entry(1, 1)[i] += 1.0;
    }
    TensorField dw = convert(jacobian(wp), Representation::physical);
    out.divM_contraction = contract(b, transpose(dw));

    const double denom = std::max(l2_norm(out.divM_spectral), 1e-300);
    out.mismatch_l2 =
        l2_norm(sub(convert(out.divM_spectral, Representation::physical),
                    convert(out.divM_contraction, Representation::physical))) / denom;
    return out;
}

} // namespace kort

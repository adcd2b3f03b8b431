#pragma once

#include <utility>

#include "kort/fft.hpp"
#include "kort/field.hpp"

namespace kort {

// Exact spectral differentiation on the torus. Odd-order operators zero the
// Nyquist modes so that derivatives of real fields stay real; the Laplacian
// keeps them. Conventions:
//   gradient(f)_i            = d_i f
//   jacobian(v)_{ij}         = d_j v_i           (Dv, rows are components)
//   divergence(v)            = d_i v_i
//   divergence(T)_j          = d_i T_{ij}        (contraction on the first index)
//   sym_double_gradient(v)   = Dv + (Dv)^T, i.e. entries d_i v_j + d_j v_i

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
VectorField divergence(const TensorField& t);
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);
TensorField jacobian(const VectorField& v);
TensorField sym_double_gradient(const VectorField& v);

/// Mean-zero solution of laplacian(u) = f (frequency 0 of the result is 0).
ScalarField inverse_laplacian(const ScalarField& f);

/// Orthogonal split v = Pv + Qv with div Pv = 0 and Qv a discrete gradient.
/// The frequency-0 mode and the Nyquist modes are assigned wholly to Pv.
std::pair<VectorField, VectorField> leray_project(const VectorField& v);

/// Spectral heat semigroup: multiplication by exp(-viscosity * t * |k|^2).
/// Rejects negative t.
ScalarField heat_propagate(const ScalarField& f, double t, double viscosity);
VectorField heat_propagate(const VectorField& f, double t, double viscosity);

/// 2/3-rule truncation: zero every coefficient with a frequency component
/// above (2/3) * (n_points / 2). Idempotent. Result is spectral.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& f);
TensorField dealias(const TensorField& f);

/// Dealiased pointwise product / quotient, returned in physical
/// representation. Every pointwise nonlinearity in the library goes through
/// these so the 2/3 rule is applied after each product.
ScalarField pmul(const ScalarField& a, const ScalarField& b);
ScalarField pdiv(const ScalarField& a, const ScalarField& b);

/// Matrix-vector and matrix-matrix pointwise products with elementwise
/// dealiasing: (Av)_i = A_{ij} v_j and (AB)_{ij} = A_{im} B_{mj}.
VectorField apply_matrix(const TensorField& a, const VectorField& v);
TensorField matmul(const TensorField& a, const TensorField& b);

/// Pointwise outer product (a tensor b)_{ij} = a_i b_j, dealiased.
TensorField outer(const VectorField& a, const VectorField& b);

/// Dealiased product of a scalar with each component/entry.
VectorField pmul(const ScalarField& s, const VectorField& v);
TensorField pmul(const ScalarField& s, const TensorField& t);

/// Frobenius-style contraction sum_{ij} A_{ij} B_{ij}, dealiased.
ScalarField contract(const TensorField& a, const TensorField& b);

} // namespace kort

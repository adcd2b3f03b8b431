#pragma once

#include "kort/dyadic.hpp"

namespace kort {

/// Bony splitting of a pointwise product, uv = T_u v + T_v u + R(u, v):
///   T_u v = sum_j S_{j-1} u * block_j v            (paraproduct)
///   R     = sum_j sum_{|a|<=1} block_j u * block_{j+a} v + mean(u) * mean(v)
/// On the torus the mean modes fall outside every dyadic block; the
/// mean-by-mean interaction (comparable "frequencies" 0 and 0) is booked into
/// the remainder so the three pieces reconstruct the full product.
/// All pointwise products are dealiased; pieces are returned in physical
/// representation. truncation_residual reports
/// ||T_u v + T_v u + R - dealias(uv)||_2 / ||dealias(uv)||_2.
struct BonyDecomposition {
    ScalarField t_uv;
    ScalarField t_vu;
    ScalarField remainder;
    double truncation_residual = 0.0;
};

BonyDecomposition bony_decompose(const ScalarField& u, const ScalarField& v,
                                 const DyadicPartition& lp);

} // namespace kort

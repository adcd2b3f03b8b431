#include "kort/bony.hpp"

#include "kort/common.hpp"
#include "kort/operators.hpp"

namespace kort {

BonyDecomposition bony_decompose(const ScalarField& u, const ScalarField& v,
                                 const DyadicPartition& lp) {
    check_same_grid(u.grid(), v.grid(), "bony_decompose");
    check_same_grid(u.grid(), lp.grid(), "bony_decompose");

    const int jmin = lp.j_min();
    const int jmax = lp.j_max();
    const int nb = lp.block_count();
    const std::size_t m = u.size();

    std::vector<ScalarField> bu(nb), bv(nb), su(nb), sv(nb);
    for (int j = jmin; j <= jmax; ++j) {
        const int idx = j - jmin;
        bu[idx] = convert(lp.block(u, j), Representation::physical);
        bv[idx] = convert(lp.block(v, j), Representation::physical);
        su[idx] = convert(lp.lowpass(u, j - 1), Representation::physical);
        sv[idx] = convert(lp.lowpass(v, j - 1), Representation::physical);
    }

    ScalarField t_uv = ScalarField::zeros(u.grid(), Representation::physical);
    ScalarField t_vu = ScalarField::zeros(u.grid(), Representation::physical);
    ScalarField rem = ScalarField::zeros(u.grid(), Representation::physical);

    for (int j = jmin; j <= jmax; ++j) {
        const int idx = j - jmin;
        for (std::size_t i = 0; i < m; ++i) {
            t_uv[i] += su[idx][i].real() * bv[idx][i].real();
            t_vu[i] += sv[idx][i].real() * bu[idx][i].real();
        }
        for (int a = -1; a <= 1; ++a) {
            const int l = j + a;
            if (l < jmin || l > jmax) continue;
            const int lidx = l - jmin;
            for (std::size_t i = 0; i < m; ++i) rem[i] += bu[idx][i].real() * bv[lidx][i].real();
        }
    }

    // mean-by-mean interaction lands in the remainder (see header)
    const double mm = mean(u) * mean(v);
    for (std::size_t i = 0; i < m; ++i) rem[i] += mm;

    BonyDecomposition out;
    out.t_uv = convert(dealias(t_uv), Representation::physical);
    out.t_vu = convert(dealias(t_vu), Representation::physical);
    out.remainder = convert(dealias(rem), Representation::physical);

    const ScalarField prod = pmul(u, v);
    ScalarField sum = add(add(out.t_uv, out.t_vu), out.remainder);
    const double denom = l2_norm(prod);
    out.truncation_residual = denom > 0.0 ? l2_norm(sub(sum, prod)) / denom : l2_norm(sum);
    return out;
}

} // namespace kort

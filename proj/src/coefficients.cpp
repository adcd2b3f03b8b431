#include "kort/coefficients.hpp"

#include "kort/common.hpp"
#include "kort/fft.hpp"
#include "kort/operators.hpp"

namespace kort {

double SmoothFn::operator()(double rho) const {
    const double d = rho - 1.0;
    double acc = 0.0;
    for (std::size_t m = coeffs_.size(); m-- > 0;) acc = (acc + coeffs_[m]) * d;
    return 1.0 + acc;
}

bool SmoothFn::is_constant_one() const {
    for (double c : coeffs_)
        if (c != 0.0) return false;
    return true;
}

ScalarField SmoothFn::apply(const ScalarField& rho) const {
    ScalarField p = convert(rho, Representation::physical);
    ScalarField out = p;
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = {(*this)(p[i].real()), 0.0};
    if (is_constant_one()) return out; // constant field, nothing to truncate
    return convert(dealias(out), Representation::physical);
}

void Coefficients::validate() const {
    if (mu_bar <= 0.0) throw Error("coefficients: mu_bar must be positive");
    if (kappa_bar < 0.0) throw Error("coefficients: kappa_bar must be nonnegative");
    if (rho_floor <= 0.0) throw Error("coefficients: rho_floor must be positive");
    if (rho0.size() == 0) throw Error("coefficients: rho0 not set");
    if (min_value(rho0) < rho_floor)
        throw Error("coefficients: rho0 falls below the positivity floor");
}

} // namespace kort

#include "kort/operators.hpp"

#include <cmath>

#include "kort/common.hpp"

namespace kort {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

void require_2d(const Grid& g, const char* where) {
    if (g.dim != 2) throw Error(std::string(where) + ": 2-D kernels only");
}

// Applies op(k0, k1, value) over all spectral slots of a 2-D field.
template <typename Op>
ScalarField spectral_map(const ScalarField& f, Op op) {
    ScalarField s = convert(f, Representation::spectral);
    const Grid& g = s.grid();
    const int n = g.n_points;
    for (int i = 0; i < n; ++i) {
        const int k0 = g.wavenumber(i);
        for (int j = 0; j < n; ++j) {
            const int k1 = g.wavenumber(j);
            s.at(i, j) = op(k0, k1, s.at(i, j));
        }
    }
    return s;
}

bool is_nyquist(int k, int n) { return k == -n / 2; }

// d/dx_axis: multiplication by i*k_axis, Nyquist zeroed (odd-order operator).
ScalarField derivative(const ScalarField& f, int axis) {
    require_2d(f.grid(), "derivative");
    const int n = f.grid().n_points;
    return spectral_map(f, [axis, n](int k0, int k1, std::complex<double> v) {
        const int k = axis == 0 ? k0 : k1;
        if (is_nyquist(k0, n) || is_nyquist(k1, n)) return std::complex<double>{0.0, 0.0};
        return I * static_cast<double>(k) * v;
    });
}

} // namespace

VectorField gradient(const ScalarField& f) {
    require_2d(f.grid(), "gradient");
    VectorField out = VectorField::zeros(f.grid(), Representation::spectral);
    for (int c = 0; c < f.grid().dim; ++c) out.component(c) = derivative(f, c);
    return out;
}

ScalarField divergence(const VectorField& v) {
    require_2d(v.grid(), "divergence");
    ScalarField out = derivative(v.component(0), 0);
    for (int c = 1; c < v.dim(); ++c) out = add(out, derivative(v.component(c), c));
    return out;
}

VectorField divergence(const TensorField& t) {
    require_2d(t.grid(), "divergence");
    VectorField out = VectorField::zeros(t.grid(), Representation::spectral);
    for (int j = 0; j < t.dim(); ++j) {
        ScalarField s = derivative(t.entry(0, j), 0);
        for (int i = 1; i < t.dim(); ++i) s = add(s, derivative(t.entry(i, j), i));
        out.component(j) = s;
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    require_2d(f.grid(), "laplacian");
    return spectral_map(f, [](int k0, int k1, std::complex<double> v) {
        return -static_cast<double>(k0 * k0 + k1 * k1) * v;
    });
}

VectorField laplacian(const VectorField& v) {
    VectorField out = v;
    for (int c = 0; c < v.dim(); ++c) out.component(c) = laplacian(v.component(c));
    return out;
}

TensorField jacobian(const VectorField& v) {
    require_2d(v.grid(), "jacobian");
    TensorField out = TensorField::zeros(v.grid(), Representation::spectral);
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) out.entry(i, j) = derivative(v.component(i), j);
    return out;
}

TensorField sym_double_gradient(const VectorField& v) {
    TensorField d = jacobian(v);
    return add(d, transpose(d));
}

ScalarField inverse_laplacian(const ScalarField& f) {
    require_2d(f.grid(), "inverse_laplacian");
    return spectral_map(f, [](int k0, int k1, std::complex<double> v) {
        const double k2 = static_cast<double>(k0 * k0 + k1 * k1);
        if (k2 == 0.0) return std::complex<double>{0.0, 0.0};
        return -v / k2;
    });
}

std::pair<VectorField, VectorField> leray_project(const VectorField& v) {
    require_2d(v.grid(), "leray_project");
    const Grid& g = v.grid();
    const int n = g.n_points;
    VectorField vs = convert(v, Representation::spectral);
    VectorField p = VectorField::zeros(g, Representation::spectral);
    VectorField q = VectorField::zeros(g, Representation::spectral);
    for (int i = 0; i < n; ++i) {
        const int k0 = g.wavenumber(i);
        for (int j = 0; j < n; ++j) {
            const int k1 = g.wavenumber(j);
            const std::complex<double> v0 = vs.component(0).at(i, j);
            const std::complex<double> v1 = vs.component(1).at(i, j);
            const double k2 = static_cast<double>(k0 * k0 + k1 * k1);
            if (k2 == 0.0 || is_nyquist(k0, n) || is_nyquist(k1, n)) {
                // mean and Nyquist content stay in the divergence-free part
                p.component(0).at(i, j) = v0;
                p.component(1).at(i, j) = v1;
                continue;
            }
            const std::complex<double> kdotv = static_cast<double>(k0) * v0 + static_cast<double>(k1) * v1;
            const std::complex<double> q0 = static_cast<double>(k0) * kdotv / k2;
            const std::complex<double> q1 = static_cast<double>(k1) * kdotv / k2;
            q.component(0).at(i, j) = q0;
            q.component(1).at(i, j) = q1;
            p.component(0).at(i, j) = v0 - q0;
            p.component(1).at(i, j) = v1 - q1;
        }
    }
    return {p, q};
}

ScalarField heat_propagate(const ScalarField& f, double t, double viscosity) {
    if (t < 0.0) throw Error("heat_propagate: negative time");
    require_2d(f.grid(), "heat_propagate");
    return spectral_map(f, [t, viscosity](int k0, int k1, std::complex<double> v) {
        return std::exp(-viscosity * t * static_cast<double>(k0 * k0 + k1 * k1)) * v;
    });
}

VectorField heat_propagate(const VectorField& f, double t, double viscosity) {
    VectorField out = f;
    for (int c = 0; c < f.dim(); ++c) out.component(c) = heat_propagate(f.component(c), t, viscosity);
    return out;
}

ScalarField dealias(const ScalarField& f) {
    require_2d(f.grid(), "dealias");
    const double cutoff = f.grid().dealias_cutoff();
    return spectral_map(f, [cutoff](int k0, int k1, std::complex<double> v) {
        if (std::abs(static_cast<double>(k0)) > cutoff || std::abs(static_cast<double>(k1)) > cutoff)
            return std::complex<double>{0.0, 0.0};
        return v;
    });
}

VectorField dealias(const VectorField& f) {
    VectorField out = f;
    for (int c = 0; c < f.dim(); ++c) out.component(c) = dealias(f.component(c));
    return out;
}

TensorField dealias(const TensorField& f) {
    TensorField out = f;
    for (int i = 0; i < f.dim(); ++i)
        for (int j = 0; j < f.dim(); ++j) out.entry(i, j) = dealias(f.entry(i, j));
    return out;
}

namespace {

// product core: physical multiply, then 2/3 truncation, returned physical
template <typename Op>
ScalarField pointwise(const ScalarField& a, const ScalarField& b, Op op, const char* where) {
    check_same_grid(a.grid(), b.grid(), where);
    ScalarField pa = convert(a, Representation::physical);
    ScalarField pb = convert(b, Representation::physical);
    ScalarField out = pa;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = {op(pa[i].real(), pb[i].real()), 0.0};
    return convert(dealias(out), Representation::physical);
}

} // namespace

ScalarField pmul(const ScalarField& a, const ScalarField& b) {
    return pointwise(a, b, [](double x, double y) { return x * y; }, "pmul");
}

ScalarField pdiv(const ScalarField& a, const ScalarField& b) {
    return pointwise(a, b, [](double x, double y) { return x / y; }, "pdiv");
}

VectorField apply_matrix(const TensorField& a, const VectorField& v) {
    check_same_grid(a.grid(), v.grid(), "apply_matrix");
    VectorField out = VectorField::zeros(a.grid(), Representation::physical);
    for (int i = 0; i < a.dim(); ++i) {
        ScalarField s = pmul(a.entry(i, 0), v.component(0));
        for (int j = 1; j < a.dim(); ++j) s = add(s, pmul(a.entry(i, j), v.component(j)));
        out.component(i) = s;
    }
    return out;
}

TensorField matmul(const TensorField& a, const TensorField& b) {
    check_same_grid(a.grid(), b.grid(), "matmul");
    TensorField out = TensorField::zeros(a.grid(), Representation::physical);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            ScalarField s = pmul(a.entry(i, 0), b.entry(0, j));
            for (int m = 1; m < a.dim(); ++m) s = add(s, pmul(a.entry(i, m), b.entry(m, j)));
            out.entry(i, j) = s;
        }
    return out;
}

TensorField outer(const VectorField& a, const VectorField& b) {
    check_same_grid(a.grid(), b.grid(), "outer");
    TensorField out = TensorField::zeros(a.grid(), Representation::physical);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.entry(i, j) = pmul(a.component(i), b.component(j));
    return out;
}

VectorField pmul(const ScalarField& s, const VectorField& v) {
    VectorField out = v;
    for (int c = 0; c < v.dim(); ++c) out.component(c) = pmul(s, v.component(c));
    return out;
}

TensorField pmul(const ScalarField& s, const TensorField& t) {
    TensorField out = t;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) out.entry(i, j) = pmul(s, t.entry(i, j));
    return out;
}

ScalarField contract(const TensorField& a, const TensorField& b) {
    check_same_grid(a.grid(), b.grid(), "contract");
    ScalarField s = pmul(a.entry(0, 0), b.entry(0, 0));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == 0 && j == 0) continue;
            s = add(s, pmul(a.entry(i, j), b.entry(i, j)));
        }
    return s;
}

} // namespace kort

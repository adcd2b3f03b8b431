#include "kort/field.hpp"

#include <algorithm>
#include <cmath>

#include "kort/common.hpp"

namespace kort {

void check_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (!(a == b)) throw Error(std::string(where) + ": grid mismatch");
}

ScalarField ScalarField::zeros(const Grid& grid, Representation rep) {
    ScalarField f;
    f.grid_ = grid;
    f.rep_ = rep;
    f.data_.assign(grid.point_count(), {0.0, 0.0});
    return f;
}

ScalarField ScalarField::from_function(const Grid& grid,
                                       const std::function<double(double, double)>& f) {
    if (grid.dim != 2) throw Error("from_function: 2-D only");
    ScalarField out = zeros(grid, Representation::physical);
    const int n = grid.n_points;
    const double h = grid.spacing();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = f(i * h, j * h);
    return out;
}

VectorField VectorField::zeros(const Grid& grid, Representation rep) {
    VectorField v;
    v.comps_.assign(grid.dim, ScalarField::zeros(grid, rep));
    return v;
}

TensorField TensorField::zeros(const Grid& grid, Representation rep) {
    TensorField t;
    t.dim_ = grid.dim;
    t.entries_.assign(static_cast<std::size_t>(grid.dim) * grid.dim,
                      ScalarField::zeros(grid, rep));
    return t;
}

namespace {

template <typename Op>
ScalarField zip(const ScalarField& a, const ScalarField& b, Op op, const char* where) {
    check_same_grid(a.grid(), b.grid(), where);
    if (a.representation() != b.representation())
        throw Error(std::string(where) + ": representation mismatch");
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
}

} // namespace

ScalarField add(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, [](auto x, auto y) { return x + y; }, "add");
}
ScalarField sub(const ScalarField& a, const ScalarField& b) {
    return zip(a, b, [](auto x, auto y) { return x - y; }, "sub");
}
ScalarField scaled(const ScalarField& a, double s) {
    ScalarField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
    return out;
}

VectorField add(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    for (int c = 0; c < a.dim(); ++c) out.component(c) = add(a.component(c), b.component(c));
    return out;
}
VectorField sub(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    for (int c = 0; c < a.dim(); ++c) out.component(c) = sub(a.component(c), b.component(c));
    return out;
}
VectorField scaled(const VectorField& a, double s) {
    VectorField out = a;
    for (int c = 0; c < a.dim(); ++c) out.component(c) = scaled(a.component(c), s);
    return out;
}

TensorField add(const TensorField& a, const TensorField& b) {
    TensorField out = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.entry(i, j) = add(a.entry(i, j), b.entry(i, j));
    return out;
}
TensorField sub(const TensorField& a, const TensorField& b) {
    TensorField out = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.entry(i, j) = sub(a.entry(i, j), b.entry(i, j));
    return out;
}
TensorField scaled(const TensorField& a, double s) {
    TensorField out = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.entry(i, j) = scaled(a.entry(i, j), s);
    return out;
}
TensorField transpose(const TensorField& a) {
    TensorField out = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.entry(i, j) = a.entry(j, i);
    return out;
}

double mean(const ScalarField& a) {
    if (a.representation() == Representation::spectral) {
        // frequency 0 carries mean * sqrt(point_count) under the unitary pair
        return a[0].real() / std::sqrt(static_cast<double>(a.size()));
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].real();
    return s / static_cast<double>(a.size());
}

namespace {
double sq_sum(const ScalarField& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i]);
    return s;
}
} // namespace

double l2_norm(const ScalarField& a) {
    const double w = std::pow(a.grid().spacing(), a.grid().dim);
    return std::sqrt(sq_sum(a) * w);
}
double l2_norm(const VectorField& a) {
    double s = 0.0;
    for (int c = 0; c < a.dim(); ++c) s += sq_sum(a.component(c));
    const double w = std::pow(a.grid().spacing(), a.grid().dim);
    return std::sqrt(s * w);
}
double l2_norm(const TensorField& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += sq_sum(a.entry(i, j));
    const double w = std::pow(a.grid().spacing(), a.grid().dim);
    return std::sqrt(s * w);
}

} // namespace kort

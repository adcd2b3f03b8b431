#include "kort/grid.hpp"

#include "kort/common.hpp"

namespace kort {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

Grid make_grid(int n_points, int dim) {
    if (n_points < 8 || !is_power_of_two(n_points))
        throw Error("grid: n_points must be a power of two >= 8");
    if (dim != 2 && dim != 3)
        throw Error("grid: dim must be 2 (3 is reserved)");
    Grid g;
    g.n_points = n_points;
    g.dim = dim;
    return g;
}

} // namespace kort

#include "gpe/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gpe {

std::shared_ptr<const Grid> Grid::make(double halfwidth, std::size_t points) {
    if (!(halfwidth > 0.0)) throw std::invalid_argument("Grid: halfwidth must be > 0");
    if (points < 16 || (points & (points - 1)) != 0)
        throw std::invalid_argument("Grid: points must be a power of two >= 16");

    auto g = std::make_shared<Grid>();
    g->halfwidth = halfwidth;
    g->points = points;
    g->dx = 2.0 * halfwidth / static_cast<double>(points);
    g->nodes.resize(points);
    g->wavenumbers.resize(points);
    const double dk = std::acos(-1.0) / halfwidth;
    for (std::size_t j = 0; j < points; ++j) {
        g->nodes[j] = -halfwidth + static_cast<double>(j) * g->dx;
        const auto sj = static_cast<std::ptrdiff_t>(j);
        const auto half = static_cast<std::ptrdiff_t>(points / 2);
        g->wavenumbers[j] = dk * static_cast<double>(sj <= half ? sj : sj - static_cast<std::ptrdiff_t>(points));
    }
    return g;
}

}  // namespace gpe

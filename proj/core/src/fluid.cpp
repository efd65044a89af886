#include "landau/fluid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNodeSearchFraction = 1e-3;

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

// Indices of interior density minima that sit below the node-search threshold.
std::vector<std::size_t> node_indices(const std::vector<double>& rho) {
    std::vector<std::size_t> out;
    const double peak = max_of(rho);
    const double cut = kNodeSearchFraction * peak;
    for (std::size_t i = 1; i + 1 < rho.size(); ++i) {
        if (rho[i] < cut && rho[i] <= rho[i - 1] && rho[i] < rho[i + 1] &&
            std::max(rho[i - 1], rho[i + 1]) > kNodeDensityFraction * peak)
            out.push_back(i);
    }
    return out;
}

}  // namespace

FluidFields fluid_fields(const WaveField& field, double b) {
    const std::size_t n = field.psi.size();
    FluidFields out;
    out.density = field.density();
    const auto dpsi = derivative(field.psi, field.grid.spacing());
    out.mass_flux.resize(n);
    out.velocity.resize(n);
    out.zonal_velocity.resize(n);
    const double cut = kNodeDensityFraction * max_of(out.density);
    for (std::size_t i = 0; i < n; ++i) {
        out.mass_flux[i] = std::imag(std::conj(field.psi[i]) * dpsi[i]);
        out.velocity[i] = out.density[i] > cut ? out.mass_flux[i] / out.density[i] : kNaN;
        out.zonal_velocity[i] = b * field.grid.point(i);
    }
    return out;
}

std::vector<double> signed_amplitude(const std::vector<double>& density) {
    std::vector<double> r(density.size());
    for (std::size_t i = 0; i < density.size(); ++i) {
        if (density[i] < 0.0) throw DomainError("density must be non-negative");
        r[i] = std::sqrt(density[i]);
    }
    // The zero lies on the side of the minimum with the smaller neighbour.
    double sign = 1.0;
    std::size_t from = 0;
    for (std::size_t i : node_indices(density)) {
        const std::size_t flip = r[i - 1] > r[i + 1] ? i + 1 : i;
        for (std::size_t k = from; k < flip; ++k) r[k] *= sign;
        sign = -sign;
        from = flip;
    }
    for (std::size_t k = from; k < r.size(); ++k) r[k] *= sign;
    return r;
}

std::vector<double> density_nodes(const std::vector<double>& density, const Grid& grid) {
    const auto r = signed_amplitude(density);
    std::vector<double> nodes;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        if (r[i] == 0.0 && i > 0 && r[i - 1] != 0.0 && r[i + 1] != 0.0 && (r[i - 1] > 0) != (r[i + 1] > 0)) {
            nodes.push_back(grid.point(i));
        } else if ((r[i] > 0.0 && r[i + 1] < 0.0) || (r[i] < 0.0 && r[i + 1] > 0.0)) {
            nodes.push_back(grid.point(i) - r[i] * grid.spacing() / (r[i + 1] - r[i]));
        }
    }
    return nodes;
}

std::vector<double> bohm_potential(const std::vector<double>& density, const Grid& grid) {
    if (density.size() != grid.count()) throw DomainError("density size does not match grid");
    const auto r = signed_amplitude(density);
    const auto r2 = second_derivative(r, grid.spacing());
    const double cut = kNodeDensityFraction * max_of(density);
    std::vector<double> q(density.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = density[i] < cut ? kNaN : -0.5 * r2[i] / r[i];
    return q;
}

}  // namespace landau

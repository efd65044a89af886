#pragma once

#include <vector>

#include "landau/grid.hpp"
#include "landau/wavefield.hpp"

namespace landau {

// Density below this fraction of max(rho) counts as a node: velocity and Bohm
// potential are reported as NaN there.
inline constexpr double kNodeDensityFraction = 1e-10;

struct FluidFields {
    std::vector<double> density;         // |psi|^2
    std::vector<double> mass_flux;       // Im(conj(psi) dpsi/dy)
    std::vector<double> velocity;        // mass_flux / density, NaN where undefined
    std::vector<double> zonal_velocity;  // u = b y (enslaved to the field)
};

FluidFields fluid_fields(const WaveField& field, double b);

// Interior zeros of a density: local minima below 1e-3 max(rho), located to sub-grid
// accuracy by linear interpolation of the signed amplitude.
std::vector<double> density_nodes(const std::vector<double>& density, const Grid& grid);

// Signed amplitude R with R^2 = rho, sign flipped across each interior node.
std::vector<double> signed_amplitude(const std::vector<double>& density);

// Q = -R''/(2R) with R the signed amplitude; NaN where rho < kNodeDensityFraction max(rho).
std::vector<double> bohm_potential(const std::vector<double>& density, const Grid& grid);

}  // namespace landau

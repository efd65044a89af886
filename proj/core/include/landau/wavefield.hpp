#pragma once

#include <vector>

#include "landau/grid.hpp"

namespace landau {

// Complex amplitudes psi(y_i, t) on a grid.
struct WaveField {
    Grid grid;
    std::vector<cplx> psi;
    double t = 0.0;

    WaveField(Grid g, std::vector<cplx> amplitudes, double time = 0.0);

    std::vector<double> density() const;
    double norm() const;  // integral of |psi|^2
};

}  // namespace landau

#include "landau/wavefield.hpp"

#include "landau/errors.hpp"

namespace landau {

WaveField::WaveField(Grid g, std::vector<cplx> amplitudes, double time)
    : grid(g), psi(std::move(amplitudes)), t(time) {
    if (psi.size() != grid.count()) throw DomainError("wave field size does not match grid");
}

std::vector<double> WaveField::density() const {
    std::vector<double> rho(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) rho[i] = std::norm(psi[i]);
    return rho;
}

double WaveField::norm() const { return simpson(density(), grid.spacing()); }

}  // namespace landau

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "landau/grid.hpp"
#include "landau/madelung.hpp"
#include "landau/wavefield.hpp"

namespace landau {

struct EnergyBreakdown {
    double t = 0.0;
    double b = 0.0;
    double E_kx = 0.0;     // zonal kinetic
    double E_ky = 0.0;     // meridional kinetic
    double E_Q = 0.0;      // Bohm potential
    double E_total = 0.0;  // E_kx + E_ky + E_Q
    double excess = 0.0;   // E_total - (n0 + 1/2) b
    double alpha = 0.0;    // Bernoulli eigenvalue Gamma (n0 + 1/2)
    std::optional<double> pseudo;
};

// Closed-form partition at the state's field value. The excess is evaluated in its
// manifestly non-negative form (n0 + 1/2)(beta^2 + (Gamma - b)^2)/(2 Gamma).
EnergyBreakdown energy_closed_form(unsigned n0, const MadelungState& state);

// Same partition measured from a wave field: E_kx = b^2 <y^2>/2, E_ky = int flux^2/(2 rho),
// E_Q = int |psi_y|^2/2 - E_ky. Points with rho below 1e-8 max(rho) give all of
// |psi_y|^2/2 to E_Q.
EnergyBreakdown energy_from_field(unsigned n0, const WaveField& field, double b);

// dE/dt = (n0 + 1/2) b b' / Gamma.
double injected_power(unsigned n0, const MadelungState& state, double b_dot);

// Time integral of the injected power over [0, t] on the dense trajectory, plus the
// (n0 + 1/2) Delta(b^2) / (2 Gamma) contributed by each switch at or before t.
double injected_energy(unsigned n0, const MadelungTrajectory& trajectory, double t);

struct StepCycle {
    double delta_e = 0.0;
    double gamma_at_return = 0.0;
    PermanentRegime residual;  // sloshing about b0 after the return switch
};

// Step b0 -> b1 at t = 0 from rest, back to b0 at t = tau.
StepCycle step_cycle_delta_e(unsigned n0, double b0, double b1, double tau);

struct PseudoEnergyResult {
    double value = 0.0;
    double window_half_width = 0.0;  // excluded |y - y_node| < window around each node
    std::size_t excluded_points = 0;
    std::size_t node_count = 0;
    std::vector<std::string> caveats;
};

// (1/2) int [v'^2 + (d/dy (rho'/rho_bar) / 2)^2] rho_bar dy about a stationary background.
// Requires |int rho'| <= 1e-8 (DomainError otherwise). Background tails below the
// node density threshold and windows of 5h around background nodes are excluded.
PseudoEnergyResult pseudo_energy(const std::vector<double>& rho_prime, const std::vector<double>& v_prime,
                                 const std::vector<double>& rho_bar, const Grid& grid);

}  // namespace landau

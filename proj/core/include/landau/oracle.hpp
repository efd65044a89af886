#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "landau/profile.hpp"
#include "landau/wavefield.hpp"

namespace landau {

struct PropagationOptions {
    // Fields are reported at these times (sorted, within (t_start, t_end]).
    std::vector<double> sample_times;
    // |psi| at either grid end above this aborts the run.
    double boundary_threshold = 1e-10;
    // Called at every sample time instead of storing the field when set.
    std::function<void(const WaveField&)> on_sample;
};

struct PropagationStats {
    std::size_t steps = 0;
    double max_step_norm_change = 0.0;
    double max_boundary_amplitude = 0.0;
};

struct Propagation {
    std::vector<WaveField> samples;
    WaveField final_field;
    PropagationStats stats;
};

// Crank-Nicolson propagation of i psi_t = -psi_yy/2 + b(t)^2 y^2 psi/2 with second-order
// central differences and Dirichlet ends. The potential is sampled at step midpoints.
// Steps never straddle a sample time or a field switch: each interval between such
// breakpoints is split into equal steps no longer than dt.
Propagation propagate(const WaveField& initial, const FieldProfile& profile, double t_end, double dt,
                      const PropagationOptions& options = {});

struct Observables {
    double norm = 0.0;
    double y2 = 0.0;         // <y^2>
    double kinetic = 0.0;    // (1/2) int |psi_y|^2
    double potential = 0.0;  // (b^2/2) <y^2>
    double energy = 0.0;     // <H> = kinetic + potential
    std::vector<double> density;
};

// Quadratures use Simpson's rule and 8th-order central differences.
Observables observables(const WaveField& field, double b);

}  // namespace landau

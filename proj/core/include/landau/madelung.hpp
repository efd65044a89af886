#pragma once

#include <vector>

#include "landau/grid.hpp"
#include "landau/ode.hpp"
#include "landau/profile.hpp"
#include "landau/wavefield.hpp"

namespace landau {

// Exact self-similar solution state: meridional strain beta, its rate, and the
// accumulated integrals of beta and Gamma.
struct MadelungState {
    double t = 0.0;
    double beta = 0.0;
    double beta_dot = 0.0;
    double int_beta = 0.0;
    double int_gamma = 0.0;
    double b = 1.0;

    // Gamma = sqrt(beta_dot + beta^2 + b^2); throws IntegrationError if Gamma^2 <= 0.
    double gamma() const;
    // Ermakov scale rho = sqrt(b0 / Gamma), with beta = rho_dot / rho.
    double ermakov_rho(double b0) const;
    // xi = exp(2 int beta) = b0 / Gamma.
    double xi(double b0) const;
};

// Closed-form sloshing after b settles at a constant b1.
struct PermanentRegime {
    double b1 = 1.0;
    double epsilon = 0.0;  // in [0, 1)
    double phi = 0.0;      // in (-pi, pi]

    double theta(double t) const { return 2.0 * b1 * t + phi; }
    double beta(double t) const;
    double beta_dot(double t) const;
    double gamma(double t) const;
    double xi(double b0, double t) const { return b0 / gamma(t); }
    double period() const;  // pi / b1
};

// Regime seeded by an instantaneous switch b0 -> b1 at t = 0 from rest.
PermanentRegime permanent_regime_after_step(double b0, double b1);

// Recovers (epsilon, phi) from (beta, Gamma) at state.t, assuming b == b1 from then on.
PermanentRegime fit_permanent_regime(const MadelungState& state, double b1);

class MadelungTrajectory {
public:
    struct Segment {
        double t_begin;
        double t_end;
        OdeSolution solution;  // components: beta, beta_dot, int beta, int Gamma
    };

    MadelungTrajectory(FieldProfile profile, double tol, std::vector<Segment> segments,
                       std::vector<MadelungState> samples);

    const FieldProfile& profile() const { return profile_; }
    double tol() const { return tol_; }
    double t_end() const { return segments_.back().t_end; }
    // Gamma(0) = b before any switch at t = 0.
    double initial_gamma() const { return profile_.initial_field(); }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<MadelungState>& samples() const { return samples_; }

    // Right-continuous at switch times.
    MadelungState state_at(double t) const;
    // Left side of the ODE, beta'' + 4 b^2 beta + 6 beta' beta + 4 beta^3 + 2 b' b, on the
    // dense output. The second derivative comes from the interpolant of beta_dot.
    double beta_equation_residual(double t) const;
    // |residual| / max(1, sum of the magnitudes of its five terms).
    double beta_equation_defect(double t) const;

private:
    friend MadelungTrajectory integrate_beta(const FieldProfile&, double, double, const std::vector<double>&);
    const Segment& segment_at(double t) const;

    FieldProfile profile_;
    double tol_;
    std::vector<Segment> segments_;
    std::vector<MadelungState> samples_;
};

// Integrates the beta oscillator from rest over [0, t_end], segment by segment between
// switches. At a switch beta and int beta are continuous and beta_dot drops by the
// jump in b^2 so that Gamma is continuous.
MadelungTrajectory integrate_beta(const FieldProfile& profile, double t_end, double tol,
                                  const std::vector<double>& sample_times = {});

// psi = exp(i beta y^2/2 - i (n0 + 1/2) int Gamma) Psi_{n0, Gamma}(y).
WaveField exact_wavefunction(unsigned n0, const MadelungState& state, const Grid& grid);

}  // namespace landau

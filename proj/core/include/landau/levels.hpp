#pragma once

#include <string>
#include <vector>

#include "landau/grid.hpp"
#include "landau/madelung.hpp"
#include "landau/profile.hpp"
#include "landau/wavefield.hpp"

namespace landau {

// Coefficients phi_m, m = 0..n_max, of psi in the instantaneous basis Psi_{m, b(t)}.
struct LevelCoefficients {
    double t = 0.0;
    double theta = 0.0;  // int_0^t b
    std::vector<cplx> phi;

    double norm() const;  // sum |phi_m|^2
    // Interaction picture Phi_m = exp(i (m + 1/2) Theta) phi_m.
    std::vector<cplx> interaction_picture() const;
};

struct LevelRun {
    unsigned n0 = 0;
    unsigned n_max = 0;
    std::vector<LevelCoefficients> samples;
    double max_norm_drift = 0.0;
    double max_top_leakage = 0.0;  // max over samples of |phi_nmax|^2 + |phi_nmax-1|^2
    double max_odd_parity = 0.0;   // max |phi_m| with m - n0 odd
    bool truncation_warning = false;
    std::vector<std::string> warnings;
};

// Integrates i phi_n' = w_n phi_n - i (b'/4b)(sqrt((n+2)(n+1)) phi_{n+2} - sqrt(n(n-1)) phi_{n-2})
// from phi_m(0) = delta_{m,n0}. Requires a smooth profile and n_max >= n0 + 8.
// Leakage into the top two levels above 1e-6 sets truncation_warning.
LevelRun integrate_level_odes(const FieldProfile& profile, unsigned n0, unsigned n_max, double t_end,
                              double tol, const std::vector<double>& sample_times);

struct PerturbationAux {
    double t = 0.0;
    double theta = 0.0;  // int_0^t b
    cplx zeta{};         // int_0^t (b'/4b) exp(2 i Theta)
};

std::vector<PerturbationAux> zeta_integral(const FieldProfile& profile, double t_end, double tol,
                                           const std::vector<double>& sample_times);

struct FirstOrderField {
    WaveField field;
    std::vector<std::string> warnings;
};

// Three-term first-order wave function, un-normalized. Warns when |zeta| > 0.1.
FirstOrderField first_order_wavefunction(unsigned n0, const PerturbationAux& aux, double b, const Grid& grid);

// Short-time moving-basis quantities that all reduce to b'(0) t / (4 b0).
struct ShortTimeRow {
    double t = 0.0;
    cplx rotated_zeta{};       // exp(-2 i Theta) zeta
    cplx rotated_zeta_conj{};  // conj of the above: exp(2 i Theta) conj(zeta)
    double gamma_shift = 0.0;  // (b - Gamma) / (4 b)
    double diff_zeta_gamma = 0.0;  // |rotated_zeta - gamma_shift|
    double diff_zeta_conj = 0.0;   // |rotated_zeta - rotated_zeta_conj|
    double diff_conj_gamma = 0.0;  // |rotated_zeta_conj - gamma_shift|
};

ShortTimeRow short_time_check(const MadelungState& state, const PerturbationAux& aux);
std::vector<ShortTimeRow> short_time_check(const std::vector<MadelungState>& states,
                                           const std::vector<PerturbationAux>& aux);

}  // namespace landau

#include "landau/energetics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "landau/errors.hpp"
#include "landau/fluid.hpp"
#include "landau/oracle.hpp"

namespace landau {

namespace {

// Floor for the flux/density ratio in the meridional kinetic term. A propagated node is
// filled to O(err^2) over a sub-grid width, so j^2/rho there is noise; the density left
// out below this floor carries at most kFluxDensityFraction * max(rho) * v^2 per unit length.
constexpr double kFluxDensityFraction = 1e-8;

}  // namespace

EnergyBreakdown energy_closed_form(unsigned n0, const MadelungState& state) {
    const double g = state.gamma();
    const double c = n0 + 0.5;
    EnergyBreakdown e;
    e.t = state.t;
    e.b = state.b;
    e.E_kx = c * state.b * state.b / (2.0 * g);
    e.E_ky = c * state.beta * state.beta / (2.0 * g);
    e.E_Q = c * g / 2.0;
    e.E_total = e.E_kx + e.E_ky + e.E_Q;
    e.excess = c * (state.beta * state.beta + (g - state.b) * (g - state.b)) / (2.0 * g);
    e.alpha = c * g;
    return e;
}

EnergyBreakdown energy_from_field(unsigned n0, const WaveField& field, double b) {
    const double h = field.grid.spacing();
    const Observables o = observables(field, b);
    const FluidFields fl = fluid_fields(field, b);
    const auto dpsi = derivative(field.psi, h);
    const double peak = *std::max_element(fl.density.begin(), fl.density.end());
    const double cut = kFluxDensityFraction * peak;
    std::vector<double> f(fl.density.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = fl.density[i] > cut ? 0.5 * fl.mass_flux[i] * fl.mass_flux[i] / fl.density[i] : 0.0;
    EnergyBreakdown e;
    e.t = field.t;
    e.b = b;
    e.E_kx = o.potential;
    e.E_ky = simpson(f, h);
    e.E_Q = o.kinetic - e.E_ky;
    e.E_total = o.energy;
    e.excess = e.E_total - (n0 + 0.5) * b;
    e.alpha = 2.0 * e.E_Q;
    return e;
}

double injected_power(unsigned n0, const MadelungState& state, double b_dot) {
    return (n0 + 0.5) * state.b * b_dot / state.gamma();
}

double injected_energy(unsigned n0, const MadelungTrajectory& trajectory, double t) {
    if (t < 0.0 || t > trajectory.t_end()) throw DomainError("time outside trajectory");
    const FieldProfile& profile = trajectory.profile();
    double total = 0.0;
    for (const auto& seg : trajectory.segments()) {
        const OdeSolution& sol = seg.solution;
        for (std::size_t k = 0; k < sol.steps(); ++k) {
            const double a = sol.step_begin(k);
            const double e = std::min(a + sol.step_size(k), t);
            if (e <= a) break;
            auto rate = [&](double s) {
                double y[4];
                sol.value(s, y);
                const double b = profile.b(s);
                const double g = std::sqrt(y[1] + y[0] * y[0] + b * b);
                return b * profile.b_dot(s) / g;
            };
            total += boost::math::quadrature::gauss<double, 10>::integrate(rate, a, e);
        }
    }
    for (const Jump& j : profile.jumps()) {
        if (j.t > t) break;
        const double g = trajectory.state_at(j.t).gamma();
        total += (j.after * j.after - j.before * j.before) / (2.0 * g);
    }
    return (n0 + 0.5) * total;
}

StepCycle step_cycle_delta_e(unsigned n0, double b0, double b1, double tau) {
    if (!(b0 > 0.0) || !(b1 > 0.0)) throw DomainError("fields must be positive");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be positive");
    const PermanentRegime up = permanent_regime_after_step(b0, b1);
    StepCycle c;
    c.gamma_at_return = up.gamma(tau);
    c.delta_e = (n0 + 0.5) * 0.5 * (b1 * b1 - b0 * b0) * (1.0 / b0 - 1.0 / c.gamma_at_return);
    MadelungState s;
    s.t = tau;
    s.beta = up.beta(tau);
    s.beta_dot = up.beta_dot(tau) - (b0 * b0 - b1 * b1);
    s.b = b0;
    c.residual = fit_permanent_regime(s, b0);
    return c;
}

PseudoEnergyResult pseudo_energy(const std::vector<double>& rho_prime, const std::vector<double>& v_prime,
                                 const std::vector<double>& rho_bar, const Grid& grid) {
    const std::size_t n = grid.count();
    if (rho_prime.size() != n || v_prime.size() != n || rho_bar.size() != n)
        throw DomainError("pseudo_energy arrays must match the grid");
    const double h = grid.spacing();
    const double mass = simpson(rho_prime, h);
    if (std::abs(mass) > 1e-8) {
        std::ostringstream msg;
        msg << "density perturbation is not mass-neutral: int rho' = " << mass;
        throw DomainError(msg.str());
    }
    PseudoEnergyResult r;
    r.window_half_width = 5.0 * h;
    const auto nodes = density_nodes(rho_bar, grid);
    r.node_count = nodes.size();
    if (!nodes.empty())
        r.caveats.push_back("background has density nodes; the potential term is regularized by excluding windows");

    const double peak = *std::max_element(rho_bar.begin(), rho_bar.end());
    const double cut = 1e-6 * peak;
    std::vector<double> q(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (rho_bar[i] > 0.0) q[i] = rho_prime[i] / rho_bar[i];
    const auto dq = derivative(q, h);
    std::vector<double> f(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = grid.point(i);
        const bool near_node = std::any_of(nodes.begin(), nodes.end(),
                                           [&](double yn) { return std::abs(y - yn) < r.window_half_width; });
        if (rho_bar[i] < cut || near_node || !std::isfinite(v_prime[i])) {
            ++r.excluded_points;
            continue;
        }
        const double s = 0.5 * dq[i];
        f[i] = 0.5 * (v_prime[i] * v_prime[i] + s * s) * rho_bar[i];
    }
    r.value = simpson(f, h);
    return r;
}

}  // namespace landau

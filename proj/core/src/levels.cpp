#include "landau/levels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "landau/basis.hpp"
#include "landau/errors.hpp"
#include "landau/ode.hpp"

namespace landau {

namespace {

void require_smooth(const FieldProfile& profile) {
    if (!profile.is_smooth())
        throw DomainError("level dynamics need a smooth profile; b' is singular at a step");
}

void require_times(double t_end, double tol) {
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw DomainError("t_end must be positive");
    if (!(tol >= 1e-14 && tol <= 1e-3)) throw DomainError("tol must lie in [1e-14, 1e-3]");
}

}  // namespace

double LevelCoefficients::norm() const {
    double s = 0.0;
    for (const auto& c : phi) s += std::norm(c);
    return s;
}

std::vector<cplx> LevelCoefficients::interaction_picture() const {
    std::vector<cplx> out(phi.size());
    for (std::size_t m = 0; m < phi.size(); ++m)
        out[m] = std::polar(1.0, (m + 0.5) * theta) * phi[m];
    return out;
}

LevelRun integrate_level_odes(const FieldProfile& profile, unsigned n0, unsigned n_max, double t_end,
                              double tol, const std::vector<double>& sample_times) {
    require_smooth(profile);
    require_times(t_end, tol);
    if (n_max < n0 + 8) throw DomainError("n_max must be at least n0 + 8");

    const std::size_t L = n_max + 1;
    // Layout: Re phi (L), Im phi (L), Theta.
    std::vector<double> up(L, 0.0), down(L, 0.0);
    for (std::size_t n = 0; n < L; ++n) {
        up[n] = std::sqrt((n + 2.0) * (n + 1.0));
        down[n] = std::sqrt(static_cast<double>(n) * (n - 1.0));
    }
    auto rhs = [&](double t, const double* y, double* dy) {
        const double b = profile.b(t);
        const double k = profile.b_dot(t) / (4.0 * b);
        const double* re = y;
        const double* im = y + L;
        for (std::size_t n = 0; n < L; ++n) {
            const double w = b * (n + 0.5);
            double cr = 0.0, ci = 0.0;
            if (n + 2 < L) {
                cr += up[n] * re[n + 2];
                ci += up[n] * im[n + 2];
            }
            if (n >= 2) {
                cr -= down[n] * re[n - 2];
                ci -= down[n] * im[n - 2];
            }
            // phi' = -i w phi - k * coupling
            dy[n] = w * im[n] - k * cr;
            dy[L + n] = -w * re[n] - k * ci;
        }
        dy[2 * L] = b;
    };

    std::vector<double> y0(2 * L + 1, 0.0);
    y0[n0] = 1.0;
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol;
    opt.max_step = profile.max_step_hint();
    const OdeSolution sol = integrate_dop853(rhs, 0.0, y0, t_end, opt);

    LevelRun run;
    run.n0 = n0;
    run.n_max = n_max;
    std::vector<double> y(2 * L + 1);
    for (double ts : sample_times) {
        sol.value(ts, y.data());
        LevelCoefficients c;
        c.t = ts;
        c.theta = y[2 * L];
        c.phi.resize(L);
        for (std::size_t n = 0; n < L; ++n) c.phi[n] = {y[n], y[L + n]};
        run.max_norm_drift = std::max(run.max_norm_drift, std::abs(c.norm() - 1.0));
        run.max_top_leakage = std::max(run.max_top_leakage, std::norm(c.phi[L - 1]) + std::norm(c.phi[L - 2]));
        for (std::size_t n = 0; n < L; ++n)
            if ((n + n0) % 2 == 1) run.max_odd_parity = std::max(run.max_odd_parity, std::abs(c.phi[n]));
        run.samples.push_back(std::move(c));
    }
    if (run.max_top_leakage > 1e-6) {
        run.truncation_warning = true;
        std::ostringstream msg;
        msg << "top-level leakage " << run.max_top_leakage << " exceeds 1e-6; increase n_max";
        run.warnings.push_back(msg.str());
    }
    return run;
}

std::vector<PerturbationAux> zeta_integral(const FieldProfile& profile, double t_end, double tol,
                                           const std::vector<double>& sample_times) {
    require_smooth(profile);
    require_times(t_end, tol);
    auto rhs = [&profile](double t, const double* y, double* dy) {
        const double b = profile.b(t);
        const double k = profile.b_dot(t) / (4.0 * b);
        dy[0] = b;
        dy[1] = k * std::cos(2.0 * y[0]);
        dy[2] = k * std::sin(2.0 * y[0]);
    };
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol;
    opt.max_step = profile.max_step_hint();
    const OdeSolution sol = integrate_dop853(rhs, 0.0, {0.0, 0.0, 0.0}, t_end, opt);
    std::vector<PerturbationAux> out;
    out.reserve(sample_times.size());
    double y[3];
    for (double ts : sample_times) {
        sol.value(ts, y);
        out.push_back({ts, y[0], {y[1], y[2]}});
    }
    return out;
}

FirstOrderField first_order_wavefunction(unsigned n0, const PerturbationAux& aux, double b, const Grid& grid) {
    check_tail_bound(grid, n0 + 2, b);
    const auto table = hermite_gauss_table(n0 + 2, b, grid);
    const double th = aux.theta;
    const cplx c0 = std::polar(1.0, -(n0 + 0.5) * th);
    const cplx cu = std::polar(1.0, -(n0 + 2.5) * th) * aux.zeta * std::sqrt((n0 + 2.0) * (n0 + 1.0));
    const cplx cd = n0 >= 2 ? std::polar(1.0, -(n0 - 1.5) * th) * std::conj(aux.zeta) *
                                  std::sqrt(static_cast<double>(n0) * (n0 - 1.0))
                            : cplx{};
    std::vector<cplx> psi(grid.count());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        psi[i] = c0 * table[n0][i] + cu * table[n0 + 2][i];
        if (n0 >= 2) psi[i] -= cd * table[n0 - 2][i];
    }
    FirstOrderField out{WaveField(grid, std::move(psi), aux.t), {}};
    if (std::abs(aux.zeta) > 0.1) {
        std::ostringstream msg;
        msg << "|zeta| = " << std::abs(aux.zeta) << " is not small; first-order field is unreliable";
        out.warnings.push_back(msg.str());
    }
    return out;
}

ShortTimeRow short_time_check(const MadelungState& state, const PerturbationAux& aux) {
    ShortTimeRow r;
    r.t = state.t;
    r.rotated_zeta = std::polar(1.0, -2.0 * aux.theta) * aux.zeta;
    r.rotated_zeta_conj = std::conj(r.rotated_zeta);
    r.gamma_shift = (state.b - state.gamma()) / (4.0 * state.b);
    r.diff_zeta_gamma = std::abs(r.rotated_zeta - r.gamma_shift);
    r.diff_zeta_conj = std::abs(r.rotated_zeta - r.rotated_zeta_conj);
    r.diff_conj_gamma = std::abs(r.rotated_zeta_conj - r.gamma_shift);
    return r;
}

std::vector<ShortTimeRow> short_time_check(const std::vector<MadelungState>& states,
                                           const std::vector<PerturbationAux>& aux) {
    if (states.size() != aux.size()) throw DomainError("state and zeta series differ in length");
    std::vector<ShortTimeRow> out;
    out.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (std::abs(states[i].t - aux[i].t) > 1e-12 * std::max(1.0, std::abs(states[i].t)))
            throw DomainError("state and zeta samples are at different times");
        out.push_back(short_time_check(states[i], aux[i]));
    }
    return out;
}

}  // namespace landau

#include "landau/madelung.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "landau/basis.hpp"
#include "landau/errors.hpp"

namespace landau {

double MadelungState::gamma() const {
    const double g2 = beta_dot + beta * beta + b * b;
    if (!(g2 > 0.0)) {
        std::ostringstream msg;
        msg << "Gamma^2 = " << g2 << " <= 0 at t = " << t;
        throw IntegrationError(msg.str());
    }
    return std::sqrt(g2);
}

double MadelungState::ermakov_rho(double b0) const { return std::sqrt(b0 / gamma()); }

double MadelungState::xi(double b0) const { return b0 / gamma(); }

double PermanentRegime::beta(double t) const {
    const double th = theta(t);
    return -b1 * epsilon * std::sin(th) / (1.0 + epsilon * std::cos(th));
}

double PermanentRegime::beta_dot(double t) const {
    const double th = theta(t);
    const double d = 1.0 + epsilon * std::cos(th);
    return -2.0 * b1 * b1 * epsilon * (std::cos(th) + epsilon) / (d * d);
}

double PermanentRegime::gamma(double t) const {
    return b1 * std::sqrt(1.0 - epsilon * epsilon) / (1.0 + epsilon * std::cos(theta(t)));
}

double PermanentRegime::period() const { return std::numbers::pi / b1; }

PermanentRegime permanent_regime_after_step(double b0, double b1) {
    MadelungState s;
    s.b = b1;
    s.beta_dot = b0 * b0 - b1 * b1;
    return fit_permanent_regime(s, b1);
}

PermanentRegime fit_permanent_regime(const MadelungState& state, double b1) {
    if (!(b1 > 0.0) || !std::isfinite(b1)) throw DomainError("b1 must be positive");
    if (!std::isfinite(state.beta) || !std::isfinite(state.beta_dot))
        throw DomainError("non-finite state");
    MadelungState s = state;
    s.b = b1;
    const double g = s.gamma();
    const double beta = s.beta;
    // sqrt(1 - eps^2) = u = 2 b1 Gamma / D with D = Gamma^2 + b1^2 + beta^2; 1 - u^2 factorizes,
    // which keeps eps accurate when it is tiny.
    const double D = g * g + b1 * b1 + beta * beta;
    const double eps =
        std::sqrt(((g - b1) * (g - b1) + beta * beta) * ((g + b1) * (g + b1) + beta * beta)) / D;
    if (!(eps < 1.0)) throw DomainError("state admits no bounded permanent regime");
    PermanentRegime r;
    r.b1 = b1;
    r.epsilon = eps;
    if (eps < 1e-14) return r;
    const double u = 2.0 * b1 * g / D;
    // eps cos(theta) = b1 u / Gamma - 1, eps sin(theta) = -beta u / Gamma.
    const double th = std::atan2(-beta * u / g, b1 * u / g - 1.0);
    double phi = std::remainder(th - 2.0 * b1 * state.t, 2.0 * std::numbers::pi);
    if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
    r.phi = phi + 0.0;  // no negative zero
    return r;
}

MadelungTrajectory::MadelungTrajectory(FieldProfile profile, double tol, std::vector<Segment> segments,
                                       std::vector<MadelungState> samples)
    : profile_(std::move(profile)), tol_(tol), segments_(std::move(segments)), samples_(std::move(samples)) {}

const MadelungTrajectory::Segment& MadelungTrajectory::segment_at(double t) const {
    if (t < 0.0 || t > t_end() * (1.0 + 1e-14) + 1e-300) {
        std::ostringstream msg;
        msg << "time " << t << " outside trajectory [0, " << t_end() << "]";
        throw DomainError(msg.str());
    }
    // Last segment whose start is <= t: right-continuous at switch times.
    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](double v, const Segment& s) { return v < s.t_begin; });
    if (it == segments_.begin()) return segments_.front();
    return *(it - 1);
}

MadelungState MadelungTrajectory::state_at(double t) const {
    const Segment& seg = segment_at(t);
    double y[4];
    seg.solution.value(std::min(t, seg.t_end), y);
    MadelungState s;
    s.t = t;
    s.beta = y[0];
    s.beta_dot = y[1];
    s.int_beta = y[2];
    s.int_gamma = y[3];
    s.b = profile_.b(t);
    return s;
}

namespace {

struct BetaTerms {
    double residual;
    double scale;
};

BetaTerms beta_terms(const MadelungTrajectory::Segment& seg, const FieldProfile& profile, double t) {
    const auto y = seg.solution.value(t);
    const auto dy = seg.solution.derivative(t);
    const double b = profile.is_smooth() ? profile.b(t) : profile.b(seg.t_begin);
    const double bd = profile.b_dot(t);
    const double beta = y[0], bdot = y[1];
    const double terms[5] = {dy[1], 4.0 * b * b * beta, 6.0 * bdot * beta, 4.0 * beta * beta * beta, 2.0 * bd * b};
    BetaTerms r{0.0, 0.0};
    for (double v : terms) {
        r.residual += v;
        r.scale += std::abs(v);
    }
    return r;
}

}  // namespace

double MadelungTrajectory::beta_equation_residual(double t) const {
    return beta_terms(segment_at(t), profile_, t).residual;
}

double MadelungTrajectory::beta_equation_defect(double t) const {
    const BetaTerms r = beta_terms(segment_at(t), profile_, t);
    return std::abs(r.residual) / std::max(1.0, r.scale);
}

MadelungTrajectory integrate_beta(const FieldProfile& profile, double t_end, double tol,
                                  const std::vector<double>& sample_times) {
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw DomainError("t_end must be positive");
    if (!(tol >= 1e-14 && tol <= 1e-3)) throw DomainError("tol must lie in [1e-14, 1e-3]");

    // On a step profile b is held at its segment value, so the final stage of a segment
    // does not see the switch that ends it.
    double segment_b = 0.0;
    const bool piecewise = !profile.is_smooth();
    auto rhs = [&](double t, const double* y, double* dy) {
        const double b = piecewise ? segment_b : profile.b(t);
        const double bd = piecewise ? 0.0 : profile.b_dot(t);
        const double beta = y[0], bdot = y[1];
        const double g2 = bdot + beta * beta + b * b;
        if (!(g2 > 0.0)) {
            std::ostringstream msg;
            msg << "Gamma^2 = " << g2 << " <= 0 at t = " << t << "; tolerance too loose or invalid state";
            throw IntegrationError(msg.str());
        }
        dy[0] = bdot;
        dy[1] = -4.0 * b * b * beta - 6.0 * bdot * beta - 4.0 * beta * beta * beta - 2.0 * bd * b;
        dy[2] = beta;
        dy[3] = std::sqrt(g2);
    };
    // The defect of the dense output (not just the step error) must stay below 10 tol,
    // and the interpolant's derivative is several orders less accurate than its value.
    OdeOptions opt;
    opt.rtol = std::max(1e-4 * tol, 1e-15);
    opt.atol = opt.rtol;
    opt.max_step = profile.max_step_hint();

    std::vector<MadelungTrajectory::Segment> segments;
    std::vector<double> y = {0.0, 0.0, 0.0, 0.0};
    double t = 0.0;
    auto advance = [&](double t_next) {
        segment_b = profile.b(t);
        OdeSolution sol = integrate_dop853(rhs, t, y, t_next, opt);
        y = sol.final_state();
        segments.push_back({t, t_next, std::move(sol)});
        t = t_next;
    };
    for (const Jump& j : profile.jumps()) {
        if (j.t > t_end) break;
        if (j.t > t) advance(j.t);
        // Gamma continuous across the switch.
        y[1] -= j.after * j.after - j.before * j.before;
        if (!(y[1] + y[0] * y[0] + j.after * j.after > 0.0))
            throw IntegrationError("Gamma^2 <= 0 after field switch");
    }
    if (t < t_end) advance(t_end);
    else segments.push_back({t, t, OdeSolution(4, t, y)});

    MadelungTrajectory traj(profile, tol, std::move(segments), {});
    traj.samples_.reserve(sample_times.size());
    for (double ts : sample_times) traj.samples_.push_back(traj.state_at(ts));
    return traj;
}

WaveField exact_wavefunction(unsigned n0, const MadelungState& state, const Grid& grid) {
    const double g = state.gamma();
    check_tail_bound(grid, n0, g);
    const LandauMode mode(n0, g);
    const auto amp = mode.sample(grid);
    const double dyn = (n0 + 0.5) * state.int_gamma;
    std::vector<cplx> psi(grid.count());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double y = grid.point(i);
        const double phase = 0.5 * state.beta * y * y - dyn;
        psi[i] = amp[i] * cplx(std::cos(phase), std::sin(phase));
    }
    return WaveField(grid, std::move(psi), state.t);
}

}  // namespace landau

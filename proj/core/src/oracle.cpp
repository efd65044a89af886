#include "landau/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "landau/errors.hpp"

namespace landau {

namespace {

// Solves the complex symmetric tridiagonal system with constant off-diagonal `off`.
void thomas(const std::vector<cplx>& diag, cplx off, std::vector<cplx>& rhs, std::vector<cplx>& work) {
    const std::size_t n = diag.size();
    work[0] = off / diag[0];
    rhs[0] /= diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const cplx m = diag[i] - off * work[i - 1];
        work[i] = off / m;
        rhs[i] = (rhs[i] - off * rhs[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= work[i] * rhs[i + 1];
}

}  // namespace

Propagation propagate(const WaveField& initial, const FieldProfile& profile, double t_end, double dt,
                      const PropagationOptions& options) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
    const double t0 = initial.t;
    if (!(t_end > t0)) throw DomainError("t_end must exceed the initial time");

    std::vector<double> breaks;
    for (double ts : options.sample_times) {
        if (ts < t0 - 1e-12 || ts > t_end + 1e-12) throw DomainError("sample time outside propagation interval");
        if (ts > t0) breaks.push_back(std::min(ts, t_end));
    }
    for (const Jump& j : profile.jumps())
        if (j.t > t0 && j.t < t_end) breaks.push_back(j.t);
    breaks.push_back(t_end);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const Grid& grid = initial.grid;
    const std::size_t n = grid.count();
    const double h = grid.spacing();
    const auto y = grid.points();
    std::vector<double> y2(n);
    for (std::size_t i = 0; i < n; ++i) y2[i] = y[i] * y[i];

    Propagation out{{}, initial, {}};
    std::vector<cplx>& psi = out.final_field.psi;
    std::vector<cplx> diag(n), rhs(n), work(n);
    const double kin_diag = 1.0 / (h * h);
    const double kin_off = -0.5 / (h * h);

    auto want_sample = [&](double t) {
        return std::any_of(options.sample_times.begin(), options.sample_times.end(),
                           [&](double ts) { return std::abs(ts - t) <= 1e-12 * std::max(1.0, std::abs(t)); });
    };
    auto emit = [&](double t) {
        out.final_field.t = t;
        if (options.on_sample) options.on_sample(out.final_field);
        else out.samples.push_back(out.final_field);
    };
    if (want_sample(t0)) emit(t0);

    double t = t0;
    double norm_prev = out.final_field.norm();
    for (double tb : breaks) {
        const auto steps = static_cast<std::size_t>(std::ceil((tb - t) / dt - 1e-9));
        const double seg_start = t;
        const double step = (tb - seg_start) / static_cast<double>(std::max<std::size_t>(steps, 1));
        for (std::size_t k = 0; k < steps; ++k) {
            const double ta = seg_start + k * step;
            const double bm = profile.b(ta + 0.5 * step);
            const double half = 0.5 * step;
            const cplx off_l(0.0, half * kin_off);  // i dt/2 * H_off
            for (std::size_t i = 0; i < n; ++i) {
                const double hd = kin_diag + 0.5 * bm * bm * y2[i];
                diag[i] = cplx(1.0, half * hd);
                cplx r = cplx(1.0, -half * hd) * psi[i];
                if (i > 0) r -= off_l * psi[i - 1];
                if (i + 1 < n) r -= off_l * psi[i + 1];
                rhs[i] = r;
            }
            thomas(diag, off_l, rhs, work);
            psi.swap(rhs);
            ++out.stats.steps;
            const double norm_now = out.final_field.norm();
            out.stats.max_step_norm_change = std::max(out.stats.max_step_norm_change, std::abs(norm_now - norm_prev));
            norm_prev = norm_now;

            const double edge = std::max(std::abs(psi.front()), std::abs(psi.back()));
            out.stats.max_boundary_amplitude = std::max(out.stats.max_boundary_amplitude, edge);
            if (edge > options.boundary_threshold) {
                std::ostringstream msg;
                msg << "boundary amplitude " << edge << " exceeds " << options.boundary_threshold
                    << " at t = " << ta + step << "; enlarge the grid half_width";
                throw BoundaryLeakError(msg.str());
            }
        }
        t = tb;
        if (want_sample(tb)) emit(tb);
    }
    out.final_field.t = t_end;
    return out;
}

Observables observables(const WaveField& field, double b) {
    const double h = field.grid.spacing();
    const std::size_t n = field.psi.size();
    const auto dpsi = derivative(field.psi, h);
    Observables o;
    o.density = field.density();
    std::vector<double> f(n);
    o.norm = simpson(o.density, h);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = field.grid.point(i);
        f[i] = y * y * o.density[i];
    }
    o.y2 = simpson(f, h);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::norm(dpsi[i]);
    o.kinetic = 0.5 * simpson(f, h);
    o.potential = 0.5 * b * b * o.y2;
    o.energy = o.kinetic + o.potential;
    return o;
}

}  // namespace landau

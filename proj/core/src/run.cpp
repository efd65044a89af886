#include "landau/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "json.hpp"
#include "landau/basis.hpp"
#include "landau/csv.hpp"
#include "landau/energetics.hpp"
#include "landau/errors.hpp"
#include "landau/fluid.hpp"
#include "landau/levels.hpp"
#include "landau/madelung.hpp"
#include "landau/oracle.hpp"

namespace landau {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kMaxCompareSamples = 200;
constexpr std::size_t kMaxFluxTimes = 201;
constexpr std::size_t kMaxFluxPoints = 257;
constexpr unsigned kCoefficientColumns = 12;
constexpr unsigned kProjectionSpan = 12;

// Every stride-th entry of ts, always including the last one.
std::vector<double> thin(const std::vector<double>& ts, std::size_t max_count) {
    const std::size_t stride = std::max<std::size_t>(1, (ts.size() + max_count - 2) / (max_count - 1));
    std::vector<double> out;
    for (std::size_t i = 0; i < ts.size(); i += stride) out.push_back(ts[i]);
    if (out.back() != ts.back()) out.push_back(ts.back());
    return out;
}

std::vector<double> merged(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

bool contains_time(const std::vector<double>& ts, double t) {
    return std::any_of(ts.begin(), ts.end(), [&](double s) { return std::abs(s - t) <= 1e-12 * std::max(1.0, t); });
}

std::string snapshot_name(const std::string& engine, double t) {
    return fmt::format("snapshot_{}_t{:.6f}.csv", engine, t);
}

void write_snapshot(const fs::path& path, const WaveField& f) {
    CsvWriter w(path, {"y", "re_psi", "im_psi", "rho"});
    for (std::size_t i = 0; i < f.psi.size(); ++i)
        w.row({f.grid.point(i), f.psi[i].real(), f.psi[i].imag(), std::norm(f.psi[i])});
    w.close();
}

// Largest level <= cap that the grid holds at every field value >= b_min.
unsigned projection_level(const Grid& grid, double b_min, unsigned cap) {
    unsigned m = 0;
    while (m < cap && tail_extent(m + 1) / std::sqrt(b_min) <= grid.half_width()) ++m;
    return m;
}

}  // namespace

bool RunReport::ok() const {
    return !engine_failed && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 init failed");
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof buf);
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx.get(), md, &len);
    std::string hex;
    for (unsigned i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
    return hex;
}

RunReport run_scenario(const ScenarioConfig& config) {
    validate_config(config);
    RunReport rep;
    rep.output_dir = config.output_dir;
    fs::create_directories(rep.output_dir);

    auto check = [&](const std::string& name, double value, double tol, bool pass) {
        rep.checks.push_back({name, value, tol, pass});
    };
    auto below = [&](const std::string& name, double value, double tol) { check(name, value, tol, value <= tol); };
    auto file = [&](const std::string& rel, const std::string& kind) {
        rep.files.push_back({rel, sha256_file(rep.output_dir / rel), kind});
    };

    const FieldProfile& profile = config.profile;
    const unsigned n0 = config.n0;
    const auto ts = config.sample_times();
    json final_regime;

    try {
        // The exact solution is always computed: it sizes the grid and anchors comparisons.
        const MadelungTrajectory traj = integrate_beta(profile, config.t_end, config.tol, ts);
        const auto& states = traj.samples();
        double gamma_min = profile.lower_bound();
        for (const auto& s : states) gamma_min = std::min(gamma_min, s.gamma());

        const unsigned n_max = config.levels_truncation();
        const unsigned level_cap = std::min(n_max, n0 + kProjectionSpan);
        const unsigned sizing_level = config.has(Engine::levels) ? level_cap : n0;
        const double half_width = config.grid.half_width.value_or(required_half_width(sizing_level, gamma_min));
        const Grid grid(half_width, config.grid.count.value_or(2049));
        check_tail_bound(grid, n0, gamma_min);
        const unsigned m_proj = projection_level(grid, profile.lower_bound(), level_cap);

        if (config.has(Engine::madelung)) {
            {
                CsvWriter w(rep.output_dir / "trajectory.csv",
                            {"t", "b", "beta", "beta_dot", "gamma", "int_beta", "int_gamma"});
                for (const auto& s : states) w.row({s.t, s.b, s.beta, s.beta_dot, s.gamma(), s.int_beta, s.int_gamma});
                w.close();
                file("trajectory.csv", "trajectory");
            }
            std::vector<EnergyBreakdown> energies;
            {
                CsvWriter w(rep.output_dir / "energy.csv", {"t", "b", "E_kx", "E_ky", "E_Q", "E_total", "excess"});
                for (const auto& s : states) {
                    energies.push_back(energy_closed_form(n0, s));
                    const auto& e = energies.back();
                    w.row({e.t, e.b, e.E_kx, e.E_ky, e.E_Q, e.E_total, e.excess});
                }
                w.close();
                file("energy.csv", "energy");
            }

            double redundancy = 0.0, defect = 0.0, min_excess = energies.front().excess;
            for (const auto& s : states) {
                const double g = s.gamma();
                redundancy = std::max(redundancy, std::abs(g - traj.initial_gamma() * std::exp(-2.0 * s.int_beta)) / g);
            }
            for (const auto& seg : traj.segments())
                if (seg.solution.steps() > 0)
                    for (double t : ts)
                        if (t >= seg.t_begin && t <= seg.t_end)
                            defect = std::max(defect, traj.beta_equation_defect(t));
            for (const auto& e : energies) min_excess = std::min(min_excess, e.excess);
            below("gamma_redundancy", redundancy, 10.0 * config.tol);
            below("beta_equation_defect", defect, 10.0 * config.tol);
            check("min_excess", min_excess, -1e-12, min_excess >= -1e-12);
            if (profile.is_smooth()) below("initial_excess", std::abs(energies.front().excess), 1e-12);
            const double e_start = (n0 + 0.5) * profile.initial_field();
            const double audit =
                std::abs(energies.back().E_total - e_start - injected_energy(n0, traj, config.t_end));
            below("energy_audit", audit, 1e-8);
            const double final_excess = energies.back().excess;
            if (config.expect.final_excess_max) below("final_excess_max", final_excess, *config.expect.final_excess_max);
            if (config.expect.final_excess_min)
                check("final_excess_min", final_excess, *config.expect.final_excess_min,
                      final_excess > *config.expect.final_excess_min);
            if (config.expect.final_abs_beta_max)
                below("final_abs_beta", std::abs(states.back().beta), *config.expect.final_abs_beta_max);

            const PermanentRegime r = fit_permanent_regime(states.back(), states.back().b);
            final_regime = {{"b1", r.b1}, {"epsilon", r.epsilon}, {"phi", r.phi}};

            // Meridional mass flux of the exact solution on a thinned (t, y) lattice.
            {
                std::size_t stride = 1;
                while ((grid.count() - 1) / stride + 1 > kMaxFluxPoints) stride *= 2;
                CsvWriter w(rep.output_dir / "mass_flux.csv", {"t", "y", "rho", "mass_flux"});
                for (double t : thin(ts, kMaxFluxTimes)) {
                    const MadelungState s = traj.state_at(t);
                    const FluidFields fl = fluid_fields(exact_wavefunction(n0, s, grid), s.b);
                    for (std::size_t i = 0; i < grid.count(); i += stride)
                        w.row({t, grid.point(i), fl.density[i], fl.mass_flux[i]});
                }
                w.close();
                file("mass_flux.csv", "mass_flux");
            }
            for (double t : config.snapshot_times) {
                const std::string name = snapshot_name("exact", t);
                write_snapshot(rep.output_dir / name, exact_wavefunction(n0, traj.state_at(t), grid));
                file(name, "snapshot");
            }
        }

        LevelRun levels;
        const std::vector<double> compare_times = thin(ts, kMaxCompareSamples);
        if (config.has(Engine::levels)) {
            levels = integrate_level_odes(profile, n0, n_max, config.t_end, config.tol, ts);
            const unsigned cols = std::min(n_max, kCoefficientColumns);
            {
                std::vector<std::string> header = {"t"};
                for (unsigned m = 0; m <= cols; ++m) header.push_back("p" + std::to_string(m));
                CsvWriter w(rep.output_dir / "coefficients.csv", header);
                for (const auto& c : levels.samples) {
                    std::vector<double> row = {c.t};
                    for (unsigned m = 0; m <= cols; ++m) row.push_back(std::norm(c.phi[m]));
                    w.row(row);
                }
                w.close();
                file("coefficients.csv", "coefficients");
            }
            {
                const auto aux = zeta_integral(profile, config.t_end, config.tol, ts);
                const auto rows = short_time_check(states, aux);
                CsvWriter w(rep.output_dir / "zeta.csv",
                            {"t", "theta", "zeta_re", "zeta_im", "rotated_zeta_re", "rotated_zeta_im", "gamma_shift"});
                for (std::size_t i = 0; i < aux.size(); ++i)
                    w.row({aux[i].t, aux[i].theta, aux[i].zeta.real(), aux[i].zeta.imag(), rows[i].rotated_zeta.real(),
                           rows[i].rotated_zeta.imag(), rows[i].gamma_shift});
                w.close();
                file("zeta.csv", "zeta");
            }
            below("level_norm_drift", levels.max_norm_drift, 1e-8);
            below("level_odd_parity", levels.max_odd_parity, 1e-12);
            below("level_top_leakage", levels.max_top_leakage, 1e-6);
            double worst = 0.0;
            for (double t : compare_times) {
                const auto it = std::lower_bound(ts.begin(), ts.end(), t);
                const auto& c = levels.samples[static_cast<std::size_t>(it - ts.begin())];
                const MadelungState s = traj.state_at(t);
                const auto proj = project_onto_basis(exact_wavefunction(n0, s, grid), s.b, m_proj);
                for (unsigned m = 0; m <= m_proj; ++m)
                    worst = std::max(worst, std::abs(std::abs(proj[m]) - std::abs(c.phi[m])));
            }
            below("levels_vs_exact_projection", worst, 1e-5);
        }

        if (config.has(Engine::oracle)) {
            const std::vector<double> times = merged(compare_times, config.snapshot_times);
            const WaveField initial = exact_wavefunction(n0, traj.state_at(0.0), grid);
            double density_err = 0.0, coeff_err = 0.0;
            CsvWriter obs(rep.output_dir / "oracle_observables.csv",
                          {"t", "norm", "y2", "energy", "energy_closed_form"});
            PropagationOptions opt;
            opt.sample_times = times;
            opt.on_sample = [&](const WaveField& f) {
                const MadelungState s = traj.state_at(f.t);
                const WaveField ex = exact_wavefunction(n0, s, grid);
                const auto r1 = f.density(), r2 = ex.density();
                for (std::size_t i = 0; i < r1.size(); ++i) density_err = std::max(density_err, std::abs(r1[i] - r2[i]));
                const Observables o = observables(f, s.b);
                obs.row({f.t, o.norm, o.y2, o.energy, energy_closed_form(n0, s).E_total});
                if (config.has(Engine::levels) && contains_time(compare_times, f.t)) {
                    const auto it = std::lower_bound(ts.begin(), ts.end(), f.t - 1e-12);
                    const auto& c = levels.samples[static_cast<std::size_t>(it - ts.begin())];
                    const auto proj = project_onto_basis(f, s.b, m_proj);
                    for (unsigned m = 0; m <= m_proj; ++m)
                        coeff_err = std::max(coeff_err, std::abs(std::abs(proj[m]) - std::abs(c.phi[m])));
                }
                if (contains_time(config.snapshot_times, f.t)) {
                    const std::string name = snapshot_name("oracle", f.t);
                    write_snapshot(rep.output_dir / name, f);
                    file(name, "snapshot");
                }
            };
            const Propagation prop = propagate(initial, profile, config.t_end, config.oracle_dt, opt);
            obs.close();
            file("oracle_observables.csv", "oracle_observables");
            below("oracle_unitarity", prop.stats.max_step_norm_change, 1e-12);
            below("oracle_boundary_amplitude", prop.stats.max_boundary_amplitude, 1e-10);
            below("oracle_vs_exact_density", density_err, 1e-4);
            if (config.has(Engine::levels)) below("levels_vs_oracle_projection", coeff_err, 1e-5);
        }
    } catch (const std::exception& e) {
        rep.engine_failed = true;
        rep.diagnostic = e.what();
    }

    json manifest;
    manifest["config"] = json::parse(config_to_json(config));
    json files = json::array();
    for (const auto& f : rep.files) files.push_back({{"path", f.path}, {"sha256", f.sha256}, {"kind", f.kind}});
    manifest["files"] = files;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    manifest["checks"] = checks;
    if (!final_regime.is_null()) manifest["final_regime"] = final_regime;
    manifest["status"] = rep.ok() ? "ok" : (rep.engine_failed ? "engine_failure" : "check_failure");
    manifest["diagnostic"] = rep.diagnostic;
    std::ofstream out(rep.output_dir / "manifest.json", std::ios::binary | std::ios::trunc);
    out << manifest.dump(2) << '\n';
    return rep;
}

}  // namespace landau

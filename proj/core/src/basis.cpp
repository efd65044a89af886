#include "landau/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "landau/errors.hpp"

namespace landau {

namespace {

void require_gamma(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        std::ostringstream msg;
        msg << "trapping frequency must be positive, got " << gamma;
        throw DomainError(msg.str());
    }
}

// Fills out[0..n_max] by the normalized three-term recurrence.
void recurrence(unsigned n_max, double gamma, double y, double* out) {
    double prev = 0.0;
    double cur = std::pow(gamma / std::numbers::pi, 0.25) * std::exp(-0.5 * gamma * y * y);
    const double s = std::sqrt(2.0 * gamma) * y;
    out[0] = cur;
    for (unsigned m = 0; m < n_max; ++m) {
        const double next = (s * cur - std::sqrt(static_cast<double>(m)) * prev) / std::sqrt(m + 1.0);
        prev = cur;
        cur = next;
        out[m + 1] = cur;
    }
}

}  // namespace

LandauMode::LandauMode(unsigned level, double frequency) : n(level), gamma(frequency) {
    require_gamma(gamma);
}

double LandauMode::frequency() const { return landau_frequency(n, gamma); }

double LandauMode::evaluate(double y) const { return hermite_gauss(n, gamma, y); }

std::vector<double> LandauMode::sample(const Grid& grid) const {
    std::vector<double> v(grid.count());
    std::vector<double> work(n + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        recurrence(n, gamma, grid.point(i), work.data());
        v[i] = work[n];
    }
    return v;
}

double hermite_gauss(unsigned n, double gamma, double y) {
    require_gamma(gamma);
    std::vector<double> work(n + 1);
    recurrence(n, gamma, y, work.data());
    return work[n];
}

std::vector<double> hermite_gauss_levels(unsigned n_max, double gamma, double y) {
    require_gamma(gamma);
    std::vector<double> out(n_max + 1);
    recurrence(n_max, gamma, y, out.data());
    return out;
}

std::vector<std::vector<double>> hermite_gauss_table(unsigned n_max, double gamma, const Grid& grid) {
    require_gamma(gamma);
    std::vector<std::vector<double>> table(n_max + 1, std::vector<double>(grid.count()));
    std::vector<double> work(n_max + 1);
    for (std::size_t i = 0; i < grid.count(); ++i) {
        recurrence(n_max, gamma, grid.point(i), work.data());
        for (unsigned m = 0; m <= n_max; ++m) table[m][i] = work[m];
    }
    return table;
}

double landau_frequency(unsigned n, double b) {
    if (!(b > 0.0)) throw DomainError("field b must be positive");
    return b * (n + 0.5);
}

LadderResult ladder_apply(Ladder direction, const std::vector<cplx>& coeffs) {
    LadderResult r{std::vector<cplx>(coeffs.size()), {}};
    const std::size_t n = coeffs.size();
    if (n == 0) return r;
    if (direction == Ladder::lower) {
        for (std::size_t m = 1; m < n; ++m) r.coeffs[m - 1] = std::sqrt(static_cast<double>(m)) * coeffs[m];
    } else {
        for (std::size_t m = 0; m + 1 < n; ++m)
            r.coeffs[m + 1] = std::sqrt(static_cast<double>(m + 1)) * coeffs[m];
        r.dropped = std::sqrt(static_cast<double>(n)) * coeffs[n - 1];
    }
    return r;
}

std::vector<cplx> project_onto_basis(const WaveField& field, double gamma, unsigned n_max) {
    require_gamma(gamma);
    const double norm = field.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "projection needs a normalized field, norm = " << norm;
        throw DomainError(msg.str());
    }
    check_tail_bound(field.grid, n_max, gamma);
    const auto table = hermite_gauss_table(n_max, gamma, field.grid);
    std::vector<cplx> out(n_max + 1);
    std::vector<cplx> integrand(field.psi.size());
    for (unsigned m = 0; m <= n_max; ++m) {
        for (std::size_t i = 0; i < integrand.size(); ++i) integrand[i] = table[m][i] * field.psi[i];
        out[m] = simpson(integrand, field.grid.spacing());
    }
    return out;
}

}  // namespace landau

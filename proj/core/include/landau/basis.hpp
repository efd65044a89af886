#pragma once

#include <vector>

#include "landau/grid.hpp"
#include "landau/wavefield.hpp"

namespace landau {

// Landau level n at trapping frequency gamma (k = 0 gauge).
struct LandauMode {
    unsigned n;
    double gamma;

    LandauMode(unsigned level, double frequency);
    double frequency() const;                  // gamma * (n + 1/2)
    double evaluate(double y) const;
    std::vector<double> sample(const Grid& grid) const;
};

// Normalized Hermite-Gauss function; no factorials or raw Hermite polynomials.
double hermite_gauss(unsigned n, double gamma, double y);

// All levels 0..n_max at one point.
std::vector<double> hermite_gauss_levels(unsigned n_max, double gamma, double y);

// table[m][i] = Psi_m(y_i) for m = 0..n_max.
std::vector<std::vector<double>> hermite_gauss_table(unsigned n_max, double gamma, const Grid& grid);

double landau_frequency(unsigned n, double b);

enum class Ladder { lower, raise };

struct LadderResult {
    std::vector<cplx> coeffs;  // same length as the input
    cplx dropped{};            // raise: amplitude pushed past the last level
};

LadderResult ladder_apply(Ladder direction, const std::vector<cplx>& coeffs);

// <Psi_m,gamma | psi> for m = 0..n_max by Simpson quadrature.
// Throws DomainError if the field norm is off by more than 1e-6 and
// TailBoundError if the grid cannot hold level n_max.
std::vector<cplx> project_onto_basis(const WaveField& field, double gamma, unsigned n_max);

}  // namespace landau

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace landau {

using cplx = std::complex<double>;

// Uniform symmetric grid y_i = -L + i*h, h = 2L/(N-1). N is odd so y = 0 is a node.
class Grid {
public:
    Grid(double half_width, std::size_t count);

    double half_width() const { return half_width_; }
    std::size_t count() const { return count_; }
    double spacing() const { return spacing_; }
    double point(std::size_t i) const;
    std::vector<double> points() const;

    // Same half-width, 2N-1 points (spacing halved).
    Grid refined() const;

    bool operator==(const Grid& other) const = default;

private:
    double half_width_;
    std::size_t count_;
    double spacing_;
};

// Smallest |y|*sqrt(gamma) beyond which level n is below 1e-12 of its norm scale.
double tail_extent(unsigned n);

// Half-width needed for level n at frequency gamma, rounded up to a multiple of 0.25.
double required_half_width(unsigned n, double gamma);

// Throws TailBoundError when the grid cannot hold level n at frequency gamma.
void check_tail_bound(const Grid& grid, unsigned n, double gamma);

// Default grid: 2049 points, wide enough for every level <= n_max at gamma >= gamma_min.
Grid default_grid(unsigned n_max, double gamma_min, std::size_t count = 2049);

// Composite Simpson rule over all grid points.
double simpson(const std::vector<double>& f, double h);
cplx simpson(const std::vector<cplx>& f, double h);

// Centered finite differences: 8th order in the interior, dropping to 6th, 4th and
// 2nd order within four points of either end (values beyond the grid taken as 0).
std::vector<double> derivative(const std::vector<double>& f, double h);
std::vector<cplx> derivative(const std::vector<cplx>& f, double h);
std::vector<double> second_derivative(const std::vector<double>& f, double h);
std::vector<cplx> second_derivative(const std::vector<cplx>& f, double h);

}  // namespace landau

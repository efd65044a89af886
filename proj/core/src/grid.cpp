#include "landau/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "landau/errors.hpp"

namespace landau {

Grid::Grid(double half_width, std::size_t count)
    : half_width_(half_width), count_(count), spacing_(0.0) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw DomainError("grid half_width must be positive and finite");
    if (count < 5 || count % 2 == 0)
        throw DomainError("grid count must be odd and at least 5");
    spacing_ = 2.0 * half_width / static_cast<double>(count - 1);
}

double Grid::point(std::size_t i) const {
    // Mirror-exact: y_{N-1-i} == -y_i.
    const auto c = static_cast<std::ptrdiff_t>(count_ / 2);
    return static_cast<double>(static_cast<std::ptrdiff_t>(i) - c) * spacing_;
}

std::vector<double> Grid::points() const {
    std::vector<double> y(count_);
    for (std::size_t i = 0; i < count_; ++i) y[i] = point(i);
    return y;
}

Grid Grid::refined() const { return Grid(half_width_, 2 * count_ - 1); }

double tail_extent(unsigned n) { return std::sqrt(2.0 * n + 1.0) + 6.5; }

double required_half_width(unsigned n, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    return std::ceil(4.0 * tail_extent(n) / std::sqrt(gamma)) / 4.0;
}

void check_tail_bound(const Grid& grid, unsigned n, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    const double need = tail_extent(n) / std::sqrt(gamma);
    if (grid.half_width() < need) {
        std::ostringstream msg;
        msg << "grid half_width " << grid.half_width() << " cannot hold level " << n
            << " at gamma " << gamma << " (needs >= " << need << ")";
        throw TailBoundError(msg.str());
    }
}

Grid default_grid(unsigned n_max, double gamma_min, std::size_t count) {
    return Grid(required_half_width(n_max, gamma_min), count);
}

namespace {

template <class T>
T simpson_impl(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    if (n < 3 || n % 2 == 0) throw DomainError("simpson needs an odd number (>= 3) of samples");
    T odd{}, even{};
    for (std::size_t i = 1; i + 1 < n; i += 2) odd += f[i];
    for (std::size_t i = 2; i + 1 < n; i += 2) even += f[i];
    return (f.front() + f.back() + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

// Antisymmetric first-derivative weights w_k for offsets k = 1..r.
constexpr std::array<std::array<double, 4>, 4> kFirst = {{
    {1.0 / 2.0, 0, 0, 0},
    {2.0 / 3.0, -1.0 / 12.0, 0, 0},
    {3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0, 0},
    {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0},
}};

// Symmetric second-derivative weights: center c0, offsets k = 1..r.
constexpr std::array<double, 4> kSecondCenter = {-2.0, -5.0 / 2.0, -49.0 / 18.0, -205.0 / 72.0};
constexpr std::array<std::array<double, 4>, 4> kSecond = {{
    {1.0, 0, 0, 0},
    {4.0 / 3.0, -1.0 / 12.0, 0, 0},
    {3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0, 0},
    {8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0},
}};

// Stencil radius at index i: 4 in the interior, shrinking near the ends.
std::size_t radius_at(std::size_t i, std::size_t n) {
    const std::size_t d = std::min(i, n - 1 - i);
    return std::clamp<std::size_t>(d, 1, 4);
}

template <class T>
std::vector<T> first_impl(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    std::vector<T> out(n);
    auto at = [&](std::ptrdiff_t j) -> T {
        return (j < 0 || j >= static_cast<std::ptrdiff_t>(n)) ? T{} : f[static_cast<std::size_t>(j)];
    };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = radius_at(i, n);
        const auto& w = kFirst[r - 1];
        T acc{};
        const auto ii = static_cast<std::ptrdiff_t>(i);
        for (std::size_t k = r; k >= 1; --k) {
            const auto kk = static_cast<std::ptrdiff_t>(k);
            acc += w[k - 1] * (at(ii + kk) - at(ii - kk));
        }
        out[i] = acc / h;
    }
    return out;
}

template <class T>
std::vector<T> second_impl(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    std::vector<T> out(n);
    auto at = [&](std::ptrdiff_t j) -> T {
        return (j < 0 || j >= static_cast<std::ptrdiff_t>(n)) ? T{} : f[static_cast<std::size_t>(j)];
    };
    const double inv_h2 = 1.0 / (h * h);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = radius_at(i, n);
        const auto& w = kSecond[r - 1];
        const auto ii = static_cast<std::ptrdiff_t>(i);
        T acc{};
        for (std::size_t k = r; k >= 1; --k) {
            const auto kk = static_cast<std::ptrdiff_t>(k);
            acc += w[k - 1] * (at(ii + kk) + at(ii - kk));
        }
        acc += kSecondCenter[r - 1] * f[i];
        out[i] = acc * inv_h2;
    }
    return out;
}

}  // namespace

double simpson(const std::vector<double>& f, double h) { return simpson_impl(f, h); }
cplx simpson(const std::vector<cplx>& f, double h) { return simpson_impl(f, h); }

std::vector<double> derivative(const std::vector<double>& f, double h) { return first_impl(f, h); }
std::vector<cplx> derivative(const std::vector<cplx>& f, double h) { return first_impl(f, h); }
std::vector<double> second_derivative(const std::vector<double>& f, double h) {
    return second_impl(f, h);
}
std::vector<cplx> second_derivative(const std::vector<cplx>& f, double h) {
    return second_impl(f, h);
}

}  // namespace landau

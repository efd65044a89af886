#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace landau {

// dy/dt = f(t, y). Writes n values into dydt.
using OdeRhs = std::function<void(double t, const double* y, double* dydt)>;

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    std::size_t max_steps = 5'000'000;
};

// Accepted steps of an explicit Dormand-Prince 8(5,3) integration with the
// 7th-order continuous extension. Valid on [t_begin, t_end].
class OdeSolution {
public:
    OdeSolution() = default;
    OdeSolution(std::size_t dim, double t0, std::vector<double> y0);

    std::size_t dimension() const { return dim_; }
    std::size_t steps() const { return t_old_.size(); }
    double t_begin() const { return t0_; }
    double t_end() const { return t_old_.empty() ? t0_ : t_old_.back() + h_.back(); }
    double step_begin(std::size_t k) const { return t_old_[k]; }
    double step_size(std::size_t k) const { return h_[k]; }
    std::size_t rhs_evaluations() const { return nfev_; }

    // State at t; t outside [t_begin, t_end] is an error.
    std::vector<double> value(double t) const;
    void value(double t, double* out) const;
    // Time derivative of the interpolant at t.
    std::vector<double> derivative(double t) const;
    const std::vector<double>& final_state() const { return y_final_; }

private:
    friend OdeSolution integrate_dop853(const OdeRhs&, double, const std::vector<double>&, double,
                                        const OdeOptions&);
    std::size_t locate(double t) const;
    void evaluate(std::size_t k, double t, double* y, double* dy) const;

    std::size_t dim_ = 0;
    double t0_ = 0.0;
    std::vector<double> y0_;
    std::vector<double> t_old_, h_;
    // Per step: y_old (dim) followed by the 7 interpolation rows F0..F6 (7*dim).
    std::vector<double> data_;
    std::vector<double> y_final_;
    std::size_t nfev_ = 0;
};

// Adaptive integration from (t0, y0) to t1 > t0. Step control, error norm and
// initial step selection follow Hairer's DOP853. Throws IntegrationError on step
// underflow or non-finite states; exceptions thrown by rhs propagate unchanged.
OdeSolution integrate_dop853(const OdeRhs& rhs, double t0, const std::vector<double>& y0, double t1,
                             const OdeOptions& options = {});

}  // namespace landau

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace landau {

enum class ProfileKind { constant, step_sequence, tanh_ramp, tanh_cycle };

std::string to_string(ProfileKind kind);

struct Jump {
    double t;
    double before;
    double after;
};

// Dimensionless drive b(t) > 0. Step sequences are right-continuous: b(t_i) is the
// value after the switch at t_i; the field before the first switch is b0.
class FieldProfile {
public:
    static FieldProfile constant(double b0);
    static FieldProfile step_sequence(double b0, std::vector<std::pair<double, double>> steps);
    // b0 + (b1 - b0) * (1 + tanh((t - center)/width)) / 2
    static FieldProfile tanh_ramp(double b0, double b1, double center, double width);
    // b0 + (b1 - b0) * s_up(t) * (1 - s_down(t)) with s the tanh switch above.
    static FieldProfile tanh_cycle(double b0, double b1, double up_center, double down_center,
                                   double width, double down_width);

    ProfileKind kind() const { return kind_; }
    bool is_smooth() const { return kind_ != ProfileKind::step_sequence; }

    double b(double t) const;
    // Classical derivative; zero between the jumps of a step sequence.
    double b_dot(double t) const;

    // Field that the initial Landau level is adjusted to.
    double initial_field() const;
    std::vector<Jump> jumps() const;

    // Conservative bounds of b over all t >= 0.
    double lower_bound() const;
    double upper_bound() const;

    // Largest ODE step that cannot skip over a ramp (infinite when piecewise constant).
    double max_step_hint() const;

    double b0() const { return b0_; }
    double b1() const { return b1_; }
    double center() const { return center_; }
    double width() const { return width_; }
    double down_center() const { return down_center_; }
    double down_width() const { return down_width_; }
    const std::vector<std::pair<double, double>>& steps() const { return steps_; }

private:
    ProfileKind kind_ = ProfileKind::constant;
    double b0_ = 1.0, b1_ = 1.0;
    double center_ = 0.0, width_ = 1.0;
    double down_center_ = 0.0, down_width_ = 1.0;
    std::vector<std::pair<double, double>> steps_;
};

}  // namespace landau

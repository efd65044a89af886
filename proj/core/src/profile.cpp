#include "landau/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "landau/errors.hpp"

namespace landau {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << what << " must be positive and finite, got " << v;
        throw DomainError(msg.str());
    }
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

double switch_on(double t, double center, double width) {
    return 0.5 * (1.0 + std::tanh((t - center) / width));
}

double switch_rate(double t, double center, double width) {
    const double th = std::tanh((t - center) / width);
    return 0.5 * (1.0 - th * th) / width;
}

}  // namespace

std::string to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::constant: return "constant";
        case ProfileKind::step_sequence: return "step_sequence";
        case ProfileKind::tanh_ramp: return "tanh_ramp";
        case ProfileKind::tanh_cycle: return "tanh_cycle";
    }
    return "unknown";
}

FieldProfile FieldProfile::constant(double b0) {
    require_positive(b0, "b0");
    FieldProfile p;
    p.kind_ = ProfileKind::constant;
    p.b0_ = p.b1_ = b0;
    return p;
}

FieldProfile FieldProfile::step_sequence(double b0, std::vector<std::pair<double, double>> steps) {
    require_positive(b0, "b0");
    double last = -std::numeric_limits<double>::infinity();
    for (const auto& [t, b] : steps) {
        require_finite(t, "step time");
        if (t < 0.0) throw DomainError("step times must be >= 0");
        if (!(t > last)) throw DomainError("step times must be strictly increasing");
        require_positive(b, "step value b");
        last = t;
    }
    FieldProfile p;
    p.kind_ = ProfileKind::step_sequence;
    p.b0_ = b0;
    p.b1_ = steps.empty() ? b0 : steps.back().second;
    p.steps_ = std::move(steps);
    return p;
}

FieldProfile FieldProfile::tanh_ramp(double b0, double b1, double center, double width) {
    require_positive(b0, "b0");
    require_positive(b1, "b1");
    require_finite(center, "center");
    require_positive(width, "width");
    FieldProfile p;
    p.kind_ = ProfileKind::tanh_ramp;
    p.b0_ = b0;
    p.b1_ = b1;
    p.center_ = center;
    p.width_ = width;
    return p;
}

FieldProfile FieldProfile::tanh_cycle(double b0, double b1, double up_center, double down_center,
                                      double width, double down_width) {
    require_positive(b0, "b0");
    require_positive(b1, "b1");
    require_finite(up_center, "up_center");
    require_finite(down_center, "down_center");
    require_positive(width, "width");
    require_positive(down_width, "down_width");
    if (!(down_center > up_center)) throw DomainError("down_center must be later than up_center");
    FieldProfile p;
    p.kind_ = ProfileKind::tanh_cycle;
    p.b0_ = b0;
    p.b1_ = b1;
    p.center_ = up_center;
    p.width_ = width;
    p.down_center_ = down_center;
    p.down_width_ = down_width;
    return p;
}

double FieldProfile::b(double t) const {
    switch (kind_) {
        case ProfileKind::constant: return b0_;
        case ProfileKind::step_sequence: {
            double v = b0_;
            for (const auto& [ts, bs] : steps_) {
                if (t >= ts) v = bs;
                else break;
            }
            return v;
        }
        case ProfileKind::tanh_ramp: return b0_ + (b1_ - b0_) * switch_on(t, center_, width_);
        case ProfileKind::tanh_cycle:
            return b0_ + (b1_ - b0_) * switch_on(t, center_, width_) *
                             (1.0 - switch_on(t, down_center_, down_width_));
    }
    return b0_;
}

double FieldProfile::b_dot(double t) const {
    switch (kind_) {
        case ProfileKind::constant:
        case ProfileKind::step_sequence: return 0.0;
        case ProfileKind::tanh_ramp: return (b1_ - b0_) * switch_rate(t, center_, width_);
        case ProfileKind::tanh_cycle: {
            const double up = switch_on(t, center_, width_);
            const double down = switch_on(t, down_center_, down_width_);
            return (b1_ - b0_) * (switch_rate(t, center_, width_) * (1.0 - down) -
                                  up * switch_rate(t, down_center_, down_width_));
        }
    }
    return 0.0;
}

double FieldProfile::initial_field() const { return kind_ == ProfileKind::step_sequence ? b0_ : b(0.0); }

std::vector<Jump> FieldProfile::jumps() const {
    std::vector<Jump> out;
    double prev = b0_;
    for (const auto& [t, b] : steps_) {
        out.push_back({t, prev, b});
        prev = b;
    }
    return out;
}

double FieldProfile::lower_bound() const {
    double lo = std::min(b0_, b1_);
    for (const auto& s : steps_) lo = std::min(lo, s.second);
    return lo;
}

double FieldProfile::upper_bound() const {
    double hi = std::max(b0_, b1_);
    for (const auto& s : steps_) hi = std::max(hi, s.second);
    return hi;
}

double FieldProfile::max_step_hint() const {
    switch (kind_) {
        case ProfileKind::tanh_ramp: return 0.25 * width_;
        case ProfileKind::tanh_cycle: return 0.25 * std::min(width_, down_width_);
        default: return std::numeric_limits<double>::infinity();
    }
}

}  // namespace landau

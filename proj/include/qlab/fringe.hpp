#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qlab/solenoid.hpp"
#include "qlab/units.hpp"

namespace qlab {

// Path-phase normalization for a trajectory of length d. HalfWave assigns
// pi*d/lambda (the convention of the closed-form intensity laws this module
// reproduces); Standard assigns the canonical action phase 2*pi*d/lambda,
// which is what a direct PDE simulation matches. Both are kept so the two
// routes can be cross-checked; they differ by a factor two in the geometric
// fringe scale.
enum class PhaseConvention { HalfWave, Standard };

// Two-slit bench: source -> slit screen -> detection screen.
struct SlitGeometry {
    double screen_distance = 1.0;        // L, slit screen to detection screen
    double slit_separation = 0.1;        // delta, center-to-center
    double source_distance = 1.0;        // d0, source to slit screen
    double wavelength = 0.05;            // lambda = 2*pi/p (de Broglie)
    double single_slit_intensity = 1.0;  // I0, one slit open
    PhaseConvention convention = PhaseConvention::Standard;

    void validate() const {
        if (!(screen_distance > 0.0) || !(slit_separation > 0.0) || !(source_distance > 0.0) ||
            !(wavelength > 0.0))
            throw std::invalid_argument("SlitGeometry: lengths must be positive");
        if (!(single_slit_intensity >= 0.0))
            throw std::invalid_argument("SlitGeometry: I0 must be non-negative");
        if (!(slit_separation < screen_distance))
            throw std::invalid_argument("SlitGeometry: paraxial regime needs delta < L");
    }
};

struct PathLengths {
    double d1 = 0.0;        // upper slit to screen point, exact
    double d2 = 0.0;        // lower slit to screen point, exact
    double d1_approx = 0.0; // sqrt(L^2+s^2) - (delta/2) sin(theta)
    double d2_approx = 0.0; // sqrt(L^2+s^2) + (delta/2) sin(theta)
    double sin_theta = 0.0; // s / sqrt(L^2+s^2)
};

// Exact Pythagorean path lengths d_{1,2} = sqrt(L^2 + (s -/+ delta/2)^2)
// together with their first-order expansion in delta, so callers can bound
// the approximation error (O(delta^2/L)).
inline PathLengths path_lengths(const SlitGeometry& g, double s) {
    PathLengths r;
    const double L = g.screen_distance, half = 0.5 * g.slit_separation;
    r.d1 = std::hypot(L, s - half);
    r.d2 = std::hypot(L, s + half);
    const double base = std::hypot(L, s);
    r.sin_theta = s / base;
    r.d1_approx = base - half * r.sin_theta;
    r.d2_approx = base + half * r.sin_theta;
    return r;
}

// Phase accumulated along one classical path (branch 1 = upper slit, 2 =
// lower slit) including the magnetic term e/hbar * integral(A.dl) along it.
inline std::complex<double> path_phase(const SlitGeometry& g, int branch, double s,
                                       double line_integral_A, const UnitsConfig& u) {
    if (branch != 1 && branch != 2)
        throw std::invalid_argument("path_phase: branch must be 1 or 2");
    const PathLengths pl = path_lengths(g, s);
    const double d = branch == 1 ? pl.d1 : pl.d2;
    const double geo = g.convention == PhaseConvention::HalfWave
                           ? std::numbers::pi * (g.source_distance + d) / g.wavelength
                           : 2.0 * std::numbers::pi * (g.source_distance + d) / g.wavelength;
    return std::polar(1.0, geo + u.charge * line_integral_A / u.hbar);
}

// |1 + e^{i dphase}|^2 * I0 = 4 I0 cos^2(dphase/2).
inline double superpose_two_path(double I0, double delta_phase) {
    if (!(I0 >= 0.0)) throw std::invalid_argument("superpose_two_path: I0 must be >= 0");
    const double c = std::cos(0.5 * delta_phase);
    return 4.0 * I0 * c * c;
}

namespace detail {

// Half of the geometric phase difference between the two paths at angle
// theta: pi*delta*sin(theta)/(2 lambda) (HalfWave) or twice that (Standard).
inline double geometric_half_phase(double theta, const SlitGeometry& g) {
    const double base = std::numbers::pi * g.slit_separation * std::sin(theta) / g.wavelength;
    return g.convention == PhaseConvention::HalfWave ? 0.5 * base : base;
}

inline double cos2_intensity(double arg, double I0) {
    const double c = std::cos(arg);
    return 4.0 * I0 * c * c;
}

} // namespace detail

// Field-free two-slit intensity I(theta) = 4 I0 cos^2(geometric half phase).
inline double two_slit_intensity(double theta, const SlitGeometry& g) {
    if (!(std::abs(theta) < 0.5 * std::numbers::pi))
        throw std::invalid_argument("two_slit_intensity: |theta| must be < pi/2");
    return detail::cos2_intensity(detail::geometric_half_phase(theta, g),
                                  g.single_slit_intensity);
}

// Uniform field B threading the two-path circuit of area S_area shifts the
// cos^2 argument by e*B*S_area/(2 hbar).
inline double magnetic_shift_intensity(double theta, const SlitGeometry& g, double B,
                                       double S_area, const UnitsConfig& u) {
    if (!(S_area >= 0.0))
        throw std::invalid_argument("magnetic_shift_intensity: S_area must be >= 0");
    const double arg = detail::geometric_half_phase(theta, g) +
                       0.5 * u.charge * B * S_area / u.hbar;
    return detail::cos2_intensity(arg, g.single_slit_intensity);
}

// Solenoid between the slits: the enclosed flux B*pi*R^2 shifts the pattern
// even though the field vanishes on the paths themselves.
inline double ab_intensity(double theta, const SlitGeometry& g, const SolenoidSpec& sol,
                           const UnitsConfig& u) {
    const double flux = sol.field * std::numbers::pi * sol.radius * sol.radius;
    const double arg = detail::geometric_half_phase(theta, g) + 0.5 * u.charge * flux / u.hbar;
    return detail::cos2_intensity(arg, g.single_slit_intensity);
}

// Solenoid plus an external uniform field through the circuit area.
inline double combined_intensity(double theta, const SlitGeometry& g, const SolenoidSpec& sol,
                                 double B_ext, double S_area, const UnitsConfig& u) {
    const double flux = sol.field * std::numbers::pi * sol.radius * sol.radius;
    const double arg = detail::geometric_half_phase(theta, g) +
                       0.5 * u.charge * (flux + B_ext * S_area) / u.hbar;
    return detail::cos2_intensity(arg, g.single_slit_intensity);
}

// Screen displacement that compensates a given total phase shift of the
// cos^2 argument, in the small-angle regime s << L. HalfWave:
// ds = -shift * lambda * L / (pi * delta); Standard: half of that.
inline double predict_fringe_shift(const SlitGeometry& g, double total_phase_shift) {
    const double full = -total_phase_shift * g.wavelength * g.screen_distance /
                        (std::numbers::pi * g.slit_separation);
    return g.convention == PhaseConvention::HalfWave ? full : 0.5 * full;
}

} // namespace qlab

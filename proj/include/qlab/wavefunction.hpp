#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qlab/fft.hpp"
#include "qlab/grid.hpp"
#include "qlab/units.hpp"

namespace qlab {

// Complex field sampled on a Grid plus the current time. Values are treated
// as immutable once constructed; evolution produces new frames.
struct Wavefunction {
    Grid grid;
    std::vector<cdouble> amp; // flattened, x-major in 2D
    double t = 0.0;

    Wavefunction() = default;
    explicit Wavefunction(const Grid& g, double time = 0.0)
        : grid(g), amp(g.size()), t(time) {}
};

// Discrete squared norm: sum |psi_i|^2 * h^dims. On a periodic grid the
// left-Riemann sum coincides with the trapezoid rule, which is what the
// spectral solver conserves.
inline double norm2(const Wavefunction& psi) {
    double s = 0.0;
    for (const auto& a : psi.amp) s += std::norm(a);
    return s * psi.grid.cell();
}

inline void normalize(Wavefunction& psi) {
    const double n2 = norm2(psi);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw std::invalid_argument("normalize: wavefunction has no finite positive norm");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& a : psi.amp) a *= s;
}

struct GaussianPacketResult {
    Wavefunction psi;
    // Set when a non-negligible part of the packet (> 1e-6 of the mass, or
    // the 5-sigma support) falls outside the grid.
    bool clipped = false;
};

namespace detail {

// Mass of the density exp(-(x-x0)^2/(2 sigma^2)) outside [min, max].
inline double gaussian_mass_outside(double x0, double sigma, double min, double max) {
    const double rt2 = std::sqrt(2.0);
    const double lo = 0.5 * std::erfc((x0 - min) / (rt2 * sigma));
    const double hi = 0.5 * std::erfc((max - x0) / (rt2 * sigma));
    return lo + hi;
}

} // namespace detail

// Normalized Gaussian packet psi ~ exp(-(x-x0)^2/(4 sigma^2)) exp(i k0 x)
// with t = 0. sigma is the stdev of the |psi|^2 density.
inline GaussianPacketResult gaussian_packet(const Grid& grid, double x0, double k0,
                                            double sigma) {
    if (grid.dims() != 1)
        throw std::invalid_argument("gaussian_packet: 1D grid expected");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("gaussian_packet: sigma must be positive");

    GaussianPacketResult r;
    r.psi = Wavefunction(grid);
    const Axis& ax = grid.axis(0);
    for (std::size_t i = 0; i < ax.n; ++i) {
        const double x = ax.coord(i);
        const double env = std::exp(-(x - x0) * (x - x0) / (4.0 * sigma * sigma));
        r.psi.amp[i] = std::polar(env, k0 * x);
    }
    normalize(r.psi);

    const double outside = detail::gaussian_mass_outside(x0, sigma, ax.min, ax.max);
    r.clipped = outside > 1e-6 || (x0 - 5.0 * sigma) < ax.min || (x0 + 5.0 * sigma) > ax.max;
    return r;
}

// 2D separable Gaussian packet with per-axis center, carrier and width.
inline GaussianPacketResult gaussian_packet2d(const Grid& grid, double x0, double y0,
                                              double kx, double ky, double sx, double sy) {
    if (grid.dims() != 2)
        throw std::invalid_argument("gaussian_packet2d: 2D grid expected");
    if (!(sx > 0.0) || !(sy > 0.0))
        throw std::invalid_argument("gaussian_packet2d: widths must be positive");

    GaussianPacketResult r;
    r.psi = Wavefunction(grid);
    const Axis& ax = grid.axis(0);
    const Axis& ay = grid.axis(1);
    for (std::size_t ix = 0; ix < ax.n; ++ix) {
        const double x = ax.coord(ix);
        const double ex = -(x - x0) * (x - x0) / (4.0 * sx * sx);
        for (std::size_t iy = 0; iy < ay.n; ++iy) {
            const double y = ay.coord(iy);
            const double env = std::exp(ex - (y - y0) * (y - y0) / (4.0 * sy * sy));
            r.psi.amp[ix * ay.n + iy] = std::polar(env, kx * x + ky * y);
        }
    }
    normalize(r.psi);

    const double outside = detail::gaussian_mass_outside(x0, sx, ax.min, ax.max) +
                           detail::gaussian_mass_outside(y0, sy, ay.min, ay.max);
    r.clipped = outside > 1e-6 || (x0 - 5.0 * sx) < ax.min || (x0 + 5.0 * sx) > ax.max ||
                (y0 - 5.0 * sy) < ay.min || (y0 + 5.0 * sy) > ay.max;
    return r;
}

inline double mean_position(const Wavefunction& psi, int d = 0) {
    const Grid& g = psi.grid;
    double num = 0.0, den = 0.0;
    if (g.dims() == 1) {
        const Axis& ax = g.axis(0);
        for (std::size_t i = 0; i < ax.n; ++i) {
            const double w = std::norm(psi.amp[i]);
            num += w * ax.coord(i);
            den += w;
        }
    } else {
        const std::size_t nx = g.axis(0).n, ny = g.axis(1).n;
        for (std::size_t ix = 0; ix < nx; ++ix)
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const double w = std::norm(psi.amp[ix * ny + iy]);
                num += w * (d == 0 ? g.axis(0).coord(ix) : g.axis(1).coord(iy));
                den += w;
            }
    }
    return num / den;
}

inline double position_variance(const Wavefunction& psi, int d = 0) {
    const double mu = mean_position(psi, d);
    const Grid& g = psi.grid;
    double num = 0.0, den = 0.0;
    if (g.dims() == 1) {
        const Axis& ax = g.axis(0);
        for (std::size_t i = 0; i < ax.n; ++i) {
            const double w = std::norm(psi.amp[i]);
            const double dx = ax.coord(i) - mu;
            num += w * dx * dx;
            den += w;
        }
    } else {
        const std::size_t nx = g.axis(0).n, ny = g.axis(1).n;
        for (std::size_t ix = 0; ix < nx; ++ix)
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const double w = std::norm(psi.amp[ix * ny + iy]);
                const double c = d == 0 ? g.axis(0).coord(ix) : g.axis(1).coord(iy);
                num += w * (c - mu) * (c - mu);
                den += w;
            }
    }
    return num / den;
}

// Spectral expectation of the wavenumber along axis d.
inline double mean_wavenumber(const Wavefunction& psi, int d = 0) {
    SpectralTransform ft(psi.grid);
    std::vector<cdouble> spec = psi.amp;
    ft.forward(spec);
    const Grid& g = psi.grid;
    double num = 0.0, den = 0.0;
    if (g.dims() == 1) {
        const auto& k = g.wavenumbers(0);
        for (std::size_t j = 0; j < spec.size(); ++j) {
            const double w = std::norm(spec[j]);
            num += w * k[j];
            den += w;
        }
    } else {
        const std::size_t nx = g.axis(0).n, ny = g.axis(1).n;
        const auto& k = g.wavenumbers(d);
        for (std::size_t ix = 0; ix < nx; ++ix)
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const double w = std::norm(spec[ix * ny + iy]);
                num += w * k[d == 0 ? ix : iy];
                den += w;
            }
    }
    return num / den;
}

// Expectation of p^2/2m with the canonical momentum p = hbar k (spectral).
// Not gauge invariant when a vector potential is present; it is the natural
// solver observable and oscillates at the cyclotron frequency in a uniform
// magnetic field.
inline double canonical_kinetic_energy(const Wavefunction& psi, const UnitsConfig& u) {
    SpectralTransform ft(psi.grid);
    std::vector<cdouble> spec = psi.amp;
    ft.forward(spec);
    const Grid& g = psi.grid;
    double num = 0.0, den = 0.0;
    if (g.dims() == 1) {
        const auto& k = g.wavenumbers(0);
        for (std::size_t j = 0; j < spec.size(); ++j) {
            const double w = std::norm(spec[j]);
            num += w * k[j] * k[j];
            den += w;
        }
    } else {
        const auto& kx = g.wavenumbers(0);
        const auto& ky = g.wavenumbers(1);
        const std::size_t nx = g.axis(0).n, ny = g.axis(1).n;
        for (std::size_t ix = 0; ix < nx; ++ix)
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const double w = std::norm(spec[ix * ny + iy]);
                num += w * (kx[ix] * kx[ix] + ky[iy] * ky[iy]);
                den += w;
            }
    }
    return u.hbar * u.hbar * num / den / (2.0 * u.mass);
}

} // namespace qlab

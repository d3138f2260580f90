#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qlab {

// One uniformly sampled periodic axis. Samples sit at x_i = min + i*h,
// i = 0..n-1, with h = (max - min)/n; max itself is the periodic image of
// min and is not a sample. Coordinates are computed, never accumulated,
// so x_i is bit-exact across runs.
struct Axis {
    double min = 0.0;
    double max = 0.0;
    std::size_t n = 0;
    double h = 0.0;

    double coord(std::size_t i) const { return min + static_cast<double>(i) * h; }

    // Signed wavenumbers in FFT ordering: k_j = 2*pi*j/(n*h) for j < n/2,
    // then the negative branch (Nyquist included on the negative side).
    double wavenumber(std::size_t j) const {
        const double period = static_cast<double>(n) * h;
        const auto jj = static_cast<std::ptrdiff_t>(j);
        const auto half = static_cast<std::ptrdiff_t>(n) / 2 + static_cast<std::ptrdiff_t>(n) % 2;
        const std::ptrdiff_t js = jj < half ? jj : jj - static_cast<std::ptrdiff_t>(n);
        return 2.0 * std::numbers::pi * static_cast<double>(js) / period;
    }
};

// Uniform periodic grid in 1 or 2 dimensions with precomputed spectral
// wavenumber ladders. In 2D, flattened fields are x-major: index(ix, iy)
// = ix*ny + iy.
class Grid {
  public:
    static Grid uniform(double min, double max, std::size_t n) {
        Grid g;
        g.dims_ = 1;
        g.axes_[0] = make_axis(min, max, n);
        g.build_ladders();
        return g;
    }

    static Grid uniform2d(double xmin, double xmax, std::size_t nx,
                          double ymin, double ymax, std::size_t ny) {
        Grid g;
        g.dims_ = 2;
        g.axes_[0] = make_axis(xmin, xmax, nx);
        g.axes_[1] = make_axis(ymin, ymax, ny);
        g.build_ladders();
        return g;
    }

    int dims() const { return dims_; }
    const Axis& axis(int d) const { return axes_.at(static_cast<std::size_t>(d)); }

    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dims_; ++d) s *= axes_[static_cast<std::size_t>(d)].n;
        return s;
    }

    // Volume element h^dims of one cell.
    double cell() const {
        double c = 1.0;
        for (int d = 0; d < dims_; ++d) c *= axes_[static_cast<std::size_t>(d)].h;
        return c;
    }

    std::size_t index(std::size_t ix, std::size_t iy = 0) const {
        return dims_ == 1 ? ix : ix * axes_[1].n + iy;
    }

    const std::vector<double>& wavenumbers(int d) const {
        return ladders_.at(static_cast<std::size_t>(d));
    }

    bool same_shape(const Grid& o) const {
        if (dims_ != o.dims_) return false;
        for (int d = 0; d < dims_; ++d) {
            const auto& a = axes_[static_cast<std::size_t>(d)];
            const auto& b = o.axes_[static_cast<std::size_t>(d)];
            if (a.n != b.n || a.min != b.min || a.max != b.max) return false;
        }
        return true;
    }

  private:
    static Axis make_axis(double min, double max, std::size_t n) {
        if (!std::isfinite(min) || !std::isfinite(max))
            throw std::invalid_argument("Grid: axis bounds must be finite");
        if (!(max > min))
            throw std::invalid_argument("Grid: axis requires max > min");
        if (n < 8)
            throw std::invalid_argument("Grid: axis requires at least 8 points");
        Axis a;
        a.min = min;
        a.max = max;
        a.n = n;
        a.h = (max - min) / static_cast<double>(n);
        return a;
    }

    void build_ladders() {
        for (int d = 0; d < dims_; ++d) {
            const Axis& a = axes_[static_cast<std::size_t>(d)];
            auto& k = ladders_[static_cast<std::size_t>(d)];
            k.resize(a.n);
            for (std::size_t j = 0; j < a.n; ++j) k[j] = a.wavenumber(j);
        }
    }

    int dims_ = 1;
    std::array<Axis, 2> axes_{};
    std::array<std::vector<double>, 2> ladders_{};
};

// 1D constructor matching the usual call-site shape elsewhere in the library.
inline Grid make_uniform_grid(double min, double max, std::size_t n) {
    return Grid::uniform(min, max, n);
}

} // namespace qlab

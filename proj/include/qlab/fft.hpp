#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

#include "qlab/grid.hpp"

namespace qlab {

using cdouble = std::complex<double>;

namespace detail {

inline fftw_complex* as_fftw(cdouble* p) { return reinterpret_cast<fftw_complex*>(p); }

struct PlanHandle {
    fftw_plan plan = nullptr;
    PlanHandle() = default;
    explicit PlanHandle(fftw_plan p) : plan(p) {}
    PlanHandle(const PlanHandle&) = delete;
    PlanHandle& operator=(const PlanHandle&) = delete;
    PlanHandle(PlanHandle&& o) noexcept : plan(o.plan) { o.plan = nullptr; }
    PlanHandle& operator=(PlanHandle&& o) noexcept {
        if (this != &o) {
            if (plan) fftw_destroy_plan(plan);
            plan = o.plan;
            o.plan = nullptr;
        }
        return *this;
    }
    ~PlanHandle() {
        if (plan) fftw_destroy_plan(plan);
    }
};

} // namespace detail

// In-place complex FFTs on fields congruent with a Grid. Plans are created
// once per grid shape (FFTW_ESTIMATE keeps planning deterministic) and
// executed on caller arrays via the new-array interface. Inverse transforms
// include the 1/N normalization for the axes transformed.
class SpectralTransform {
  public:
    explicit SpectralTransform(const Grid& grid) : grid_(grid) {
        std::vector<cdouble> scratch(grid.size());
        auto* buf = detail::as_fftw(scratch.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        if (grid.dims() == 1) {
            const int n = static_cast<int>(grid.axis(0).n);
            fwd_ = detail::PlanHandle(fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, flags));
            inv_ = detail::PlanHandle(fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, flags));
        } else {
            const int nx = static_cast<int>(grid.axis(0).n);
            const int ny = static_cast<int>(grid.axis(1).n);
            fwd_ = detail::PlanHandle(fftw_plan_dft_2d(nx, ny, buf, buf, FFTW_FORWARD, flags));
            inv_ = detail::PlanHandle(fftw_plan_dft_2d(nx, ny, buf, buf, FFTW_BACKWARD, flags));
            // batched 1D lines: along x (stride ny), along y (contiguous)
            fwd_x_ = plan_lines(buf, nx, ny, ny, 1, FFTW_FORWARD);
            inv_x_ = plan_lines(buf, nx, ny, ny, 1, FFTW_BACKWARD);
            fwd_y_ = plan_lines(buf, ny, nx, 1, ny, FFTW_FORWARD);
            inv_y_ = plan_lines(buf, ny, nx, 1, ny, FFTW_BACKWARD);
        }
    }

    const Grid& grid() const { return grid_; }

    void forward(std::vector<cdouble>& a) const {
        check(a);
        fftw_execute_dft(fwd_.plan, detail::as_fftw(a.data()), detail::as_fftw(a.data()));
    }

    void inverse(std::vector<cdouble>& a) const {
        check(a);
        fftw_execute_dft(inv_.plan, detail::as_fftw(a.data()), detail::as_fftw(a.data()));
        scale(a, 1.0 / static_cast<double>(grid_.size()));
    }

    // 2D only: transform every line along one axis, leaving the other axis
    // in its original representation.
    void forward_axis(int d, std::vector<cdouble>& a) const {
        check(a);
        require_2d();
        const auto& p = d == 0 ? fwd_x_ : fwd_y_;
        fftw_execute_dft(p.plan, detail::as_fftw(a.data()), detail::as_fftw(a.data()));
    }

    void inverse_axis(int d, std::vector<cdouble>& a) const {
        check(a);
        require_2d();
        const auto& p = d == 0 ? inv_x_ : inv_y_;
        fftw_execute_dft(p.plan, detail::as_fftw(a.data()), detail::as_fftw(a.data()));
        scale(a, 1.0 / static_cast<double>(grid_.axis(d).n));
    }

  private:
    static detail::PlanHandle plan_lines(fftw_complex* buf, int len, int howmany, int stride,
                                         int dist, int sign) {
        int n[] = {len};
        return detail::PlanHandle(fftw_plan_many_dft(1, n, howmany, buf, nullptr, stride, dist,
                                                     buf, nullptr, stride, dist, sign,
                                                     FFTW_ESTIMATE | FFTW_UNALIGNED));
    }

    void check(const std::vector<cdouble>& a) const {
        if (a.size() != grid_.size())
            throw std::invalid_argument("SpectralTransform: field size does not match grid");
    }

    void require_2d() const {
        if (grid_.dims() != 2)
            throw std::logic_error("SpectralTransform: per-axis transform needs a 2D grid");
    }

    static void scale(std::vector<cdouble>& a, double s) {
        for (auto& v : a) v *= s;
    }

    Grid grid_;
    detail::PlanHandle fwd_, inv_, fwd_x_, inv_x_, fwd_y_, inv_y_;
};

// d/dx_d of a periodic complex field, computed spectrally.
inline std::vector<cdouble> spectral_derivative(const SpectralTransform& ft, int d,
                                                const std::vector<cdouble>& f) {
    const Grid& g = ft.grid();
    std::vector<cdouble> out = f;
    const cdouble i_unit(0.0, 1.0);
    if (g.dims() == 1) {
        ft.forward(out);
        const auto& k = g.wavenumbers(0);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] *= i_unit * k[j];
        ft.inverse(out);
    } else {
        ft.forward_axis(d, out);
        const auto& k = g.wavenumbers(d);
        const std::size_t nx = g.axis(0).n, ny = g.axis(1).n;
        for (std::size_t ix = 0; ix < nx; ++ix)
            for (std::size_t iy = 0; iy < ny; ++iy)
                out[ix * ny + iy] *= i_unit * k[d == 0 ? ix : iy];
        ft.inverse_axis(d, out);
    }
    return out;
}

// Laplacian of a periodic complex field, computed spectrally over all axes.
inline std::vector<cdouble> spectral_laplacian(const SpectralTransform& ft,
                                               const std::vector<cdouble>& f) {
    const Grid& g = ft.grid();
    std::vector<cdouble> out = f;
    ft.forward(out);
    if (g.dims() == 1) {
        const auto& k = g.wavenumbers(0);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] *= -k[j] * k[j];
    } else {
        const auto& kx = g.wavenumbers(0);
        const auto& ky = g.wavenumbers(1);
        const std::size_t nx = g.axis(0).n, ny = g.axis(1).n;
        for (std::size_t ix = 0; ix < nx; ++ix)
            for (std::size_t iy = 0; iy < ny; ++iy)
                out[ix * ny + iy] *= -(kx[ix] * kx[ix] + ky[iy] * ky[iy]);
    }
    ft.inverse(out);
    return out;
}

// Convenience wrappers for real-valued periodic fields.
inline std::vector<double> spectral_derivative_real(const SpectralTransform& ft, int d,
                                                    const std::vector<double>& f) {
    std::vector<cdouble> tmp(f.begin(), f.end());
    tmp = spectral_derivative(ft, d, tmp);
    std::vector<double> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = tmp[j].real();
    return out;
}

inline std::vector<double> spectral_laplacian_real(const SpectralTransform& ft,
                                                   const std::vector<double>& f) {
    std::vector<cdouble> tmp(f.begin(), f.end());
    tmp = spectral_laplacian(ft, tmp);
    std::vector<double> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = tmp[j].real();
    return out;
}

} // namespace qlab

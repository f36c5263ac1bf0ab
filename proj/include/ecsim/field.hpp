#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ecsim/grid.hpp"

namespace ecsim {

using cplx = std::complex<double>;

// Real samples at collocation points, row-major: value(i,j) sits at (x(i), x(j)).
struct PhysicalScalar {
    Grid grid;
    std::vector<double> v;

    PhysicalScalar() = default;
    explicit PhysicalScalar(const Grid& g) : grid(g), v(g.size(), 0.0) {}

    double& at(int i, int j) { return v[grid.idx(i, j)]; }
    double at(int i, int j) const { return v[grid.idx(i, j)]; }
};

// Fourier coefficients c(m) = (1/n^2) sum_j f(x_j) exp(-i k_m . x_j), same layout.
// For data sampled from a decaying function on the plane, c(m) ~ fhat(k_m) / (2L)^2.
struct SpectralScalar {
    Grid grid;
    std::vector<cplx> c;

    SpectralScalar() = default;
    explicit SpectralScalar(const Grid& g) : grid(g), c(g.size(), cplx(0.0, 0.0)) {}

    cplx& at(int i, int j) { return c[grid.idx(i, j)]; }
    cplx at(int i, int j) const { return c[grid.idx(i, j)]; }

    // Spatial mean of the represented field.
    cplx mean() const { return c.empty() ? cplx(0.0, 0.0) : c[0]; }
};

struct PhysicalVector {
    PhysicalScalar v1, v2;

    PhysicalVector() = default;
    explicit PhysicalVector(const Grid& g) : v1(g), v2(g) {}
    const Grid& grid() const { return v1.grid; }
};

struct SpectralVector {
    SpectralScalar c1, c2;

    SpectralVector() = default;
    explicit SpectralVector(const Grid& g) : c1(g), c2(g) {}
    SpectralVector(SpectralScalar a, SpectralScalar b) : c1(std::move(a)), c2(std::move(b)) {
        if (!(c1.grid == c2.grid))
            throw std::invalid_argument("vector field: components on different grids");
    }
    const Grid& grid() const { return c1.grid; }
};

}  // namespace ecsim

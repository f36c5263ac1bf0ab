#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecsim {

inline constexpr double kPi = 3.14159265358979323846;

// Uniform n x n collocation grid on the square [-L, L)^2.
// Wavevectors are k = (pi/L) * m for integer modes m in [-n/2, n/2),
// stored in FFT index order: m = i for i < n/2, else i - n.
struct Grid {
    int n = 0;
    double half_period = 0.0;  // L

    Grid() = default;
    Grid(int n_, double half_period_) : n(n_), half_period(half_period_) {
        if (n % 2 != 0 || n < 16 || n > 16384)
            throw std::invalid_argument("grid: n must be even and in [16, 16384], got " +
                                        std::to_string(n));
        if (!(half_period > 0.0) || !std::isfinite(half_period))
            throw std::invalid_argument("grid: half_period must be positive");
    }

    double spacing() const { return 2.0 * half_period / n; }        // h
    double x(int i) const { return -half_period + i * spacing(); }  // collocation coordinate
    int mode(int i) const { return i < n / 2 ? i : i - n; }
    double k(int i) const { return mode(i) * kPi / half_period; }
    double k_min() const { return kPi / half_period; }

    std::size_t size() const { return static_cast<std::size_t>(n) * n; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n + j; }

    // 2/3-rule cutoff: modes with 3*max(|m1|,|m2|) > n alias under quadratic products.
    bool aliased(int m1, int m2) const {
        int a = m1 < 0 ? -m1 : m1;
        int b = m2 < 0 ? -m2 : m2;
        return 3 * (a > b ? a : b) > n;
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.n == b.n && a.half_period == b.half_period;
    }
};

}  // namespace ecsim

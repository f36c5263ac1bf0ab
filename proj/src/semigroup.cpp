#include "ecsim/semigroup.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ecsim/fft.hpp"
#include "ecsim/operators.hpp"

namespace ecsim {
namespace {

void warn_if_unresolved(double tail, const char* who) {
    if (tail > 1e-10)
        std::fprintf(stderr, "warning: %s: unresolved field, tail fraction %.3e\n", who, tail);
}

}  // namespace

SpectralScalar poisson_evolve(const SpectralScalar& q0, double t) {
    if (t < 0.0) throw std::invalid_argument("poisson_evolve: t must be nonnegative");
    const Grid& g = q0.grid;
    SpectralScalar out(g);
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            out.c[s] = q0.c[s] * std::exp(-std::sqrt(k1 * k1 + k2 * k2) * t);
        }
    }
    return out;
}

SpectralVector heat_evolve(const SpectralVector& u0, double t) {
    if (t < 0.0) throw std::invalid_argument("heat_evolve: t must be nonnegative");
    const Grid& g = u0.grid();
    SpectralVector out(g);
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            const double e = std::exp(-(k1 * k1 + k2 * k2) * t);
            out.c1.c[s] = u0.c1.c[s] * e;
            out.c2.c[s] = u0.c2.c[s] * e;
        }
    }
    return out;
}

double grad_sup(const SpectralScalar& f) {
    warn_if_unresolved(tail_fraction(f), "grad_sup");
    return norm_linf(gradient(f));
}

double grad_sup(const SpectralVector& v) {
    warn_if_unresolved(tail_fraction(v), "grad_sup");
    PhysicalVector g1 = inverse(gradient(v.c1));
    PhysicalVector g2 = inverse(gradient(v.c2));
    double m = 0.0;
    const std::size_t sz = v.grid().size();
    for (std::size_t i = 0; i < sz; ++i) {
        const double s = g1.v1.v[i] * g1.v1.v[i] + g1.v2.v[i] * g1.v2.v[i] +
                         g2.v1.v[i] * g2.v1.v[i] + g2.v2.v[i] * g2.v2.v[i];
        if (s > m) m = s;
    }
    return std::sqrt(m);
}

}  // namespace ecsim

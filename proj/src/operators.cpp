#include "ecsim/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "ecsim/fft.hpp"

namespace ecsim {
namespace {

double spectral_l2(const SpectralScalar& f) {
    double s = 0.0;
    for (const cplx& z : f.c) s += std::norm(z);
    return std::sqrt(s);
}

// Quadrature L4 norm of a list of physical components combined pointwise as a
// Euclidean magnitude: ( h^2 sum (sum_c v_c^2)^2 )^(1/4).
double quadrature_l4(const Grid& g, std::initializer_list<const std::vector<double>*> comps) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double m2 = 0.0;
        for (const auto* c : comps) m2 += (*c)[i] * (*c)[i];
        s += m2 * m2;
    }
    const double h = g.spacing();
    return std::pow(h * h * s, 0.25);
}

}  // namespace

SpectralScalar fractional_laplacian(const SpectralScalar& f, double alpha) {
    if (alpha < -2.0 || alpha > 4.0)
        throw std::invalid_argument("fractional_laplacian: alpha outside [-2, 4]");
    if (alpha < 0.0 && !is_mean_free(f))
        throw std::invalid_argument("fractional_laplacian: negative order needs mean-free input");
    const Grid& g = f.grid;
    SpectralScalar out(g);
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            const double kk = k1 * k1 + k2 * k2;
            if (kk == 0.0) {
                out.c[s] = (alpha == 0.0) ? f.c[s] : cplx(0.0, 0.0);
            } else {
                out.c[s] = f.c[s] * std::pow(kk, 0.5 * alpha);
            }
        }
    }
    return out;
}

SpectralVector riesz(const SpectralScalar& f) {
    if (!is_mean_free(f)) throw std::invalid_argument("riesz: input must be mean-free");
    const Grid& g = f.grid;
    const int nyq = g.n / 2;
    SpectralVector out(g);
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            const double kn = std::sqrt(k1 * k1 + k2 * k2);
            if (kn == 0.0 || i == nyq || j == nyq) continue;
            const cplx iz(-f.c[s].imag(), f.c[s].real());  // i * c
            out.c1.c[s] = iz * (k1 / kn);
            out.c2.c[s] = iz * (k2 / kn);
        }
    }
    return out;
}

SpectralVector leray_project(const SpectralVector& v) {
    const Grid& g = v.grid();
    const int nyq = g.n / 2;
    SpectralVector out(g);
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            const double kk = k1 * k1 + k2 * k2;
            if (kk == 0.0) {  // mean flow is divergence-free; pass through
                out.c1.c[s] = v.c1.c[s];
                out.c2.c[s] = v.c2.c[s];
                continue;
            }
            if (i == nyq || j == nyq) continue;  // k1 k2 coupling is odd there
            const cplx dot = (k1 * v.c1.c[s] + k2 * v.c2.c[s]) / kk;
            out.c1.c[s] = v.c1.c[s] - k1 * dot;
            out.c2.c[s] = v.c2.c[s] - k2 * dot;
        }
    }
    return out;
}

SpectralVector gradient(const SpectralScalar& f) {
    const Grid& g = f.grid;
    const int nyq = g.n / 2;
    SpectralVector out(g);
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            if (i == nyq || j == nyq) continue;
            const cplx iz(-f.c[s].imag(), f.c[s].real());
            out.c1.c[s] = iz * k1;
            out.c2.c[s] = iz * k2;
        }
    }
    return out;
}

SpectralScalar divergence(const SpectralVector& v) {
    const Grid& g = v.grid();
    const int nyq = g.n / 2;
    SpectralScalar out(g);
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            if (i == nyq || j == nyq) continue;
            const cplx z = k1 * v.c1.c[s] + k2 * v.c2.c[s];
            out.c[s] = cplx(-z.imag(), z.real());  // i * (k . v)
        }
    }
    return out;
}

void dealias_inplace(SpectralScalar& f) {
    const Grid& g = f.grid;
    for (int i = 0; i < g.n; ++i) {
        const int m1 = g.mode(i);
        for (int j = 0; j < g.n; ++j) {
            if (g.aliased(m1, g.mode(j))) f.c[g.idx(i, j)] = cplx(0.0, 0.0);
        }
    }
}

void dealias_inplace(SpectralVector& v) {
    dealias_inplace(v.c1);
    dealias_inplace(v.c2);
}

SpectralScalar dealias(const SpectralScalar& f) {
    SpectralScalar out = f;
    dealias_inplace(out);
    return out;
}

SpectralVector dealias(const SpectralVector& v) {
    SpectralVector out = v;
    dealias_inplace(out);
    return out;
}

double norm_l2(const SpectralScalar& f) { return 2.0 * f.grid.half_period * spectral_l2(f); }

double norm_l2(const SpectralVector& v) {
    double s = 0.0;
    for (const cplx& z : v.c1.c) s += std::norm(z);
    for (const cplx& z : v.c2.c) s += std::norm(z);
    return 2.0 * v.grid().half_period * std::sqrt(s);
}

double norm_l4(const SpectralScalar& f) {
    PhysicalScalar p = inverse(f);
    return quadrature_l4(f.grid, {&p.v});
}

double norm_l4(const SpectralVector& v) {
    PhysicalVector p = inverse(v);
    return quadrature_l4(v.grid(), {&p.v1.v, &p.v2.v});
}

double norm_linf(const SpectralScalar& f) {
    PhysicalScalar p = inverse(f);
    double m = 0.0;
    for (double x : p.v) m = std::max(m, std::fabs(x));
    return m;
}

double norm_linf(const SpectralVector& v) {
    PhysicalVector p = inverse(v);
    double m = 0.0;
    for (std::size_t i = 0; i < v.grid().size(); ++i)
        m = std::max(m, p.v1.v[i] * p.v1.v[i] + p.v2.v[i] * p.v2.v[i]);
    return std::sqrt(m);
}

double norm_hs(const SpectralScalar& f, double s) {
    if (s == 0.0) return norm_l2(f);
    if (s < 0.0 && !is_mean_free(f))
        throw std::invalid_argument("norm_hs: negative order needs mean-free input");
    const Grid& g = f.grid;
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const double kk = k1 * k1 + k2 * k2;
            if (kk == 0.0) continue;
            acc += std::pow(kk, s) * std::norm(f.c[g.idx(i, j)]);
        }
    }
    return 2.0 * g.half_period * std::sqrt(acc);
}

double norm_hs(const SpectralVector& v, double s) {
    const double a = norm_hs(v.c1, s);
    const double b = norm_hs(v.c2, s);
    return std::sqrt(a * a + b * b);
}

double norm_w14(const SpectralScalar& f) {
    SpectralVector gf = gradient(f);
    PhysicalVector gp = inverse(gf);
    return norm_l4(f) + quadrature_l4(f.grid, {&gp.v1.v, &gp.v2.v});
}

double norm_w14(const SpectralVector& v) {
    SpectralVector g1 = gradient(v.c1);
    SpectralVector g2 = gradient(v.c2);
    PhysicalVector g1p = inverse(g1);
    PhysicalVector g2p = inverse(g2);
    return norm_l4(v) +
           quadrature_l4(v.grid(), {&g1p.v1.v, &g1p.v2.v, &g2p.v1.v, &g2p.v2.v});
}

bool is_mean_free(const SpectralScalar& f, double rel_tol) {
    const double scale = spectral_l2(f);
    return std::abs(f.mean()) <= rel_tol * scale;
}

double divergence_rel(const SpectralVector& v) {
    const Grid& g = v.grid();
    double num = 0.0, den = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t s = g.idx(i, j);
            const double kk = k1 * k1 + k2 * k2;
            num += std::norm(k1 * v.c1.c[s] + k2 * v.c2.c[s]);
            den += kk * (std::norm(v.c1.c[s]) + std::norm(v.c2.c[s]));
        }
    }
    return den == 0.0 ? 0.0 : std::sqrt(num / den);
}

double tail_fraction(const SpectralScalar& f) {
    const Grid& g = f.grid;
    double tail = 0.0, total = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const int m1 = g.mode(i);
        for (int j = 0; j < g.n; ++j) {
            const double e = std::norm(f.c[g.idx(i, j)]);
            total += e;
            if (g.aliased(m1, g.mode(j))) tail += e;
        }
    }
    return total == 0.0 ? 0.0 : tail / total;
}

double tail_fraction(const SpectralVector& v) {
    const Grid& g = v.grid();
    double tail = 0.0, total = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const int m1 = g.mode(i);
        for (int j = 0; j < g.n; ++j) {
            const std::size_t s = g.idx(i, j);
            const double e = std::norm(v.c1.c[s]) + std::norm(v.c2.c[s]);
            total += e;
            if (g.aliased(m1, g.mode(j))) tail += e;
        }
    }
    return total == 0.0 ? 0.0 : tail / total;
}

SpectralScalar zero_pad(const SpectralScalar& f, int n_new) {
    const Grid& g = f.grid;
    if (n_new < g.n) throw std::invalid_argument("zero_pad: target resolution is coarser");
    Grid g2(n_new, g.half_period);
    SpectralScalar out(g2);
    for (int i = 0; i < g.n; ++i) {
        const int m1 = g.mode(i);
        const int i2 = m1 >= 0 ? m1 : m1 + n_new;
        for (int j = 0; j < g.n; ++j) {
            const int m2 = g.mode(j);
            const int j2 = m2 >= 0 ? m2 : m2 + n_new;
            out.c[g2.idx(i2, j2)] = f.c[g.idx(i, j)];
        }
    }
    return out;
}

SpectralVector zero_pad(const SpectralVector& v, int n_new) {
    SpectralVector out;
    out.c1 = zero_pad(v.c1, n_new);
    out.c2 = zero_pad(v.c2, n_new);
    return out;
}

}  // namespace ecsim

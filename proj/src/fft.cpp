#include "ecsim/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <new>
#include <stdexcept>

namespace ecsim {
namespace {

// One cached in-place c2c plan pair per resolution, executed on an internal aligned
// buffer under a lock. FFTW_ESTIMATE keeps plan selection deterministic, which keeps
// whole runs bit-reproducible (FFTW_MEASURE picks algorithms by timing).
struct PlanPair {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex& fft_mutex() {
    static std::mutex m;
    return m;
}

PlanPair& plans_for(int n) {
    static std::map<int, PlanPair> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PlanPair p;
    p.buf = fftw_alloc_complex(static_cast<std::size_t>(n) * n);
    if (!p.buf) throw std::bad_alloc();
    p.fwd = fftw_plan_dft_2d(n, n, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_2d(n, n, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!p.fwd || !p.bwd) throw std::runtime_error("fft: planning failed");
    return cache.emplace(n, p).first->second;
}

}  // namespace

SpectralScalar forward(const PhysicalScalar& f) {
    const Grid& g = f.grid;
    const int n = g.n;
    for (double x : f.v)
        if (!std::isfinite(x)) throw std::invalid_argument("forward: non-finite input");

    SpectralScalar out(g);
    std::lock_guard<std::mutex> lock(fft_mutex());
    PlanPair& p = plans_for(n);
    for (std::size_t s = 0; s < g.size(); ++s) {
        p.buf[s][0] = f.v[s];
        p.buf[s][1] = 0.0;
    }
    fftw_execute(p.fwd);
    // Collocation points start at -L, not 0: exp(-i k_m . x_j) picks up (-1)^(m1+m2)
    // relative to the raw DFT (n is even, so the mode parity equals the index parity).
    const double inv = 1.0 / (static_cast<double>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t s = g.idx(i, j);
            const double ph = ((i + j) & 1) ? -inv : inv;
            out.c[s] = cplx(p.buf[s][0] * ph, p.buf[s][1] * ph);
        }
    }
    return out;
}

PhysicalScalar inverse(const SpectralScalar& f) {
    const Grid& g = f.grid;
    const int n = g.n;
    for (const cplx& z : f.c)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("inverse: non-finite input");

    PhysicalScalar out(g);
    std::lock_guard<std::mutex> lock(fft_mutex());
    PlanPair& p = plans_for(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t s = g.idx(i, j);
            const double ph = ((i + j) & 1) ? -1.0 : 1.0;
            p.buf[s][0] = f.c[s].real() * ph;
            p.buf[s][1] = f.c[s].imag() * ph;
        }
    }
    fftw_execute(p.bwd);
    for (std::size_t s = 0; s < g.size(); ++s) out.v[s] = p.buf[s][0];
    return out;
}

SpectralVector forward(const PhysicalVector& f) {
    SpectralVector out;
    out.c1 = forward(f.v1);
    out.c2 = forward(f.v2);
    return out;
}

PhysicalVector inverse(const SpectralVector& f) {
    PhysicalVector out;
    out.v1 = inverse(f.c1);
    out.v2 = inverse(f.c2);
    return out;
}

}  // namespace ecsim

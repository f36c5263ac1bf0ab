#include <doctest.h>

#include <cmath>
#include <vector>

#include "ecsim/integrator.hpp"
#include "ecsim/operators.hpp"
#include "ecsim/semigroup.hpp"

using namespace ecsim;

namespace {

// Decaying charge blob plus an offset vortex, directly in coefficients. The
// offset keeps the quadratic terms active (concentric data makes them vanish).
SimState blob_vortex(const Grid& g, double mass, double w, double amp, double sg, double cx) {
    const double box = 4.0 * g.half_period * g.half_period;
    SimState s(0.0, SpectralScalar(g), SpectralVector(g));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (g.aliased(g.mode(i), g.mode(j))) continue;
            const double k1 = g.k(i), k2 = g.k(j);
            const double kk = k1 * k1 + k2 * k2;
            s.q_hat.c[g.idx(i, j)] = mass * std::exp(-0.5 * w * w * kk) / box;
            const cplx psi = amp * 2.0 * kPi * sg * sg / box * std::exp(-0.5 * sg * sg * kk) *
                             std::exp(cplx(0.0, -k1 * cx));
            s.u_hat.c1.c[g.idx(i, j)] = cplx(0.0, -k2) * psi;
            s.u_hat.c2.c[g.idx(i, j)] = cplx(0.0, k1) * psi;
        }
    return s;
}

double state_dist(const SimState& a, const SimState& b) {
    const double box = 4.0 * a.q_hat.grid.half_period * a.q_hat.grid.half_period;
    double acc = 0.0;
    for (std::size_t i = 0; i < a.q_hat.grid.size(); ++i) {
        acc += std::norm(a.q_hat.c[i] - b.q_hat.c[i]);
        acc += std::norm(a.u_hat.c1.c[i] - b.u_hat.c1.c[i]);
        acc += std::norm(a.u_hat.c2.c[i] - b.u_hat.c2.c[i]);
    }
    return std::sqrt(box * acc);
}

}  // namespace

TEST_CASE("cfl step limit follows the advective formula") {
    Grid g(32, 2.0);
    SimState s(0.0, SpectralScalar(g), SpectralVector(g));
    s.u_hat.c1.c[0] = 2.0;  // constant velocity (2, 0)

    IntegratorConfig cfg;
    cfg.dt_max = 10.0;
    cfg.cfl = 0.4;
    CHECK(cfl_dt(s, cfg) == doctest::Approx(0.4 * g.spacing() / 2.0).epsilon(1e-14));

    cfg.dt_max = 0.01;
    CHECK(cfl_dt(s, cfg) == doctest::Approx(0.01).epsilon(1e-15));

    SimState rest(0.0, SpectralScalar(g), SpectralVector(g));
    cfg.dt_max = 0.05;
    CHECK(cfl_dt(rest, cfg) == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("linear-only stepping reproduces the exact decay factors") {
    Grid g(32, 2.0);
    SimState s = blob_vortex(g, 1.0, 0.6, 0.5, 0.8, 1.0);
    const double dt = 0.37;
    SimState next = step(s, dt, true);

    SpectralScalar q_exact = poisson_evolve(s.q_hat, dt);
    SpectralVector u_exact = heat_evolve(s.u_hat, dt);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::abs(next.q_hat.c[i] - q_exact.c[i]));
        worst = std::max(worst, std::abs(next.u_hat.c1.c[i] - u_exact.c1.c[i]));
        worst = std::max(worst, std::abs(next.u_hat.c2.c[i] - u_exact.c2.c[i]));
        scale = std::max(scale, std::abs(s.q_hat.c[i]));
    }
    CHECK(worst < 1e-14 * scale);
}

TEST_CASE("full stepping converges at second order") {
    Grid g(64, 8.0);
    SimState s0 = blob_vortex(g, 1.0, 1.0, 0.5, 1.5, 2.0);
    const double t_end = 0.8;

    auto integrate = [&](double dt) {
        SimState s = s0;
        int steps = static_cast<int>(std::round(t_end / dt));
        for (int i = 0; i < steps; ++i) s = step(s, dt);
        return s;
    };
    SimState ref = integrate(0.0025);
    const double e1 = state_dist(integrate(0.04), ref);
    const double e2 = state_dist(integrate(0.02), ref);
    CHECK(e1 / e2 > 3.4);
    CHECK(e1 / e2 < 4.6);
}

TEST_CASE("stepping preserves the mean of q bitwise") {
    Grid g(64, 8.0);
    SimState s = blob_vortex(g, 1.0, 1.0, 0.5, 1.5, 2.0);
    const cplx mean0 = s.q_hat.c[0];
    for (int i = 0; i < 5; ++i) s = step(s, 0.05);
    CHECK(s.q_hat.c[0] == mean0);
}

TEST_CASE("run lands exactly on the sample times") {
    Grid g(32, 8.0);
    SimState s = blob_vortex(g, 0.5, 1.0, 0.2, 1.5, 2.0);
    IntegratorConfig cfg;
    cfg.t_end = 1.0;
    cfg.sample_times = {0.0, 0.3, 0.7, 1.0};

    std::vector<double> seen;
    run(s, cfg, [&](const SimState& st) { seen.push_back(st.t); });
    REQUIRE(seen.size() == cfg.sample_times.size());
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == cfg.sample_times[i]);
}

TEST_CASE("run validates its configuration") {
    Grid g(32, 8.0);
    SimState s(0.0, SpectralScalar(g), SpectralVector(g));
    auto sink = [](const SimState&) {};

    IntegratorConfig bad;
    bad.t_end = 1.0;
    bad.cfl = 0.0;
    CHECK_THROWS_AS(run(s, bad, sink), std::invalid_argument);
    bad.cfl = 1.5;
    CHECK_THROWS_AS(run(s, bad, sink), std::invalid_argument);

    IntegratorConfig bad2;
    bad2.t_end = 1.0;
    bad2.sample_times = {0.5, 0.25};
    CHECK_THROWS_AS(run(s, bad2, sink), std::invalid_argument);
    bad2.sample_times = {0.5, 2.0};
    CHECK_THROWS_AS(run(s, bad2, sink), std::invalid_argument);

    IntegratorConfig bad3;
    bad3.t_end = 1.0;
    bad3.dt_max = 0.0;
    CHECK_THROWS_AS(run(s, bad3, sink), std::invalid_argument);
}

TEST_CASE("non-finite coefficients raise the blow-up error") {
    Grid g(32, 8.0);
    SimState s = blob_vortex(g, 0.5, 1.0, 0.2, 1.5, 2.0);
    s.t = 1.25;
    s.q_hat.c[3] = cplx(std::nan(""), 0.0);
    try {
        step(s, 0.05, true);
        FAIL("expected BlowupError");
    } catch (const BlowupError& e) {
        CHECK(e.last_good_t == doctest::Approx(1.25));
    }
}

TEST_CASE("restarting from an intermediate state is bit-exact") {
    Grid g(32, 8.0);
    SimState s0 = blob_vortex(g, 0.5, 1.0, 0.3, 1.5, 2.0);
    IntegratorConfig cfg;
    cfg.t_end = 2.0;
    cfg.sample_times = {1.0, 2.0};

    SimState mid;
    SimState straight = run(s0, cfg, [&](const SimState& st) {
        if (st.t == 1.0) mid = st;
    });

    std::vector<double> seen;
    SimState resumed = run(mid, cfg, [&](const SimState& st) { seen.push_back(st.t); });
    REQUIRE(seen.size() == 2);  // the t=1 sample re-fires at the restart point
    CHECK(seen[0] == 1.0);
    CHECK(seen[1] == 2.0);

    REQUIRE(straight.t == resumed.t);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(straight.q_hat.c[i] == resumed.q_hat.c[i]);
        CHECK(straight.u_hat.c1.c[i] == resumed.u_hat.c1.c[i]);
        CHECK(straight.u_hat.c2.c[i] == resumed.u_hat.c2.c[i]);
    }
}

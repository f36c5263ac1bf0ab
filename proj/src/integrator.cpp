#include "ecsim/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "ecsim/operators.hpp"

namespace ecsim {
namespace {

bool finite(const SpectralScalar& f) {
    for (const cplx& z : f.c)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

bool finite_state(const SimState& s) {
    return finite(s.q_hat) && finite(s.u_hat.c1) && finite(s.u_hat.c2);
}

void validate_config(const IntegratorConfig& cfg) {
    if (!(cfg.dt_max > 0.0)) throw std::invalid_argument("integrator: dt_max must be positive");
    if (!(cfg.cfl > 0.0) || cfg.cfl > 1.0)
        throw std::invalid_argument("integrator: cfl must be in (0, 1]");
    if (cfg.t_end < 0.0) throw std::invalid_argument("integrator: t_end must be nonnegative");
    double prev = -1.0;
    for (double t : cfg.sample_times) {
        if (t < 0.0 || t > cfg.t_end || t <= prev)
            throw std::invalid_argument(
                "integrator: sample_times must increase within [0, t_end]");
        prev = t;
    }
}

}  // namespace

double cfl_dt(const SimState& s, const IntegratorConfig& cfg) {
    const double umax = std::max(norm_linf(s.u_hat), 1e-8);
    return std::min(cfg.dt_max, cfg.cfl * s.q_hat.grid.spacing() / umax);
}

SimState step(const SimState& s, double dt, bool linear_only) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    const Grid& g = s.q_hat.grid;

    SpectralScalar nq(g);
    SpectralVector nu(g);
    if (!linear_only) eval_rhs(s, nq, nu);

    // Per-mode decay factors for this dt.
    std::vector<double> e1(g.size()), e2(g.size());
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const double kk = k1 * k1 + k2 * k2;
            const std::size_t idx = g.idx(i, j);
            e1[idx] = std::exp(-std::sqrt(kk) * dt);
            e2[idx] = std::exp(-kk * dt);
        }
    }

    SimState pred(s.t + dt, SpectralScalar(g), SpectralVector(g));
    for (std::size_t i = 0; i < g.size(); ++i) {
        pred.q_hat.c[i] = e1[i] * (s.q_hat.c[i] + dt * nq.c[i]);
        pred.u_hat.c1.c[i] = e2[i] * (s.u_hat.c1.c[i] + dt * nu.c1.c[i]);
        pred.u_hat.c2.c[i] = e2[i] * (s.u_hat.c2.c[i] + dt * nu.c2.c[i]);
    }

    SimState out(s.t + dt, SpectralScalar(g), SpectralVector(g));
    if (linear_only) {
        out = std::move(pred);
    } else {
        SpectralScalar nq2(g);
        SpectralVector nu2(g);
        eval_rhs(pred, nq2, nu2);
        const double hdt = 0.5 * dt;
        for (std::size_t i = 0; i < g.size(); ++i) {
            out.q_hat.c[i] = e1[i] * (s.q_hat.c[i] + hdt * nq.c[i]) + hdt * nq2.c[i];
            out.u_hat.c1.c[i] = e2[i] * (s.u_hat.c1.c[i] + hdt * nu.c1.c[i]) + hdt * nu2.c1.c[i];
            out.u_hat.c2.c[i] = e2[i] * (s.u_hat.c2.c[i] + hdt * nu.c2.c[i]) + hdt * nu2.c2.c[i];
        }
    }

    if (!finite_state(out))
        throw BlowupError(s.t, "step: non-finite state (blow-up) after t = " + std::to_string(s.t));
    return out;
}

SimState run(SimState s, const IntegratorConfig& cfg,
             const std::function<void(const SimState&)>& sink) {
    validate_config(cfg);
    const double tiny = 1e-12 * std::max(1.0, cfg.t_end);

    double last_sample_qnorm = -1.0;
    auto arrive = [&](const SimState& st) {
        if (sink) sink(st);
        const double qn = norm_l2(st.q_hat);
        if (last_sample_qnorm >= 0.0 && qn > 1.01 * last_sample_qnorm + 1e-300)
            throw BlowupError(st.t, "run: ||q|| grew more than 1% between samples at t = " +
                                        std::to_string(st.t));
        last_sample_qnorm = qn;
    };

    auto advance_to = [&](SimState st, double target) {
        while (st.t < target - tiny) {
            double dt = std::min(cfl_dt(st, cfg), target - st.t);
            // Avoid a sliver step at the end: split the remainder evenly.
            if (target - st.t - dt < tiny) dt = target - st.t;
            st = step(st, dt, cfg.linear_only);
        }
        st.t = target;  // absorb accumulated round-off
        return st;
    };

    for (double ts : cfg.sample_times) {
        if (ts < s.t - tiny) continue;  // behind the state already (resumed run)
        if (ts <= s.t + tiny) {
            s.t = ts;
            arrive(s);
            continue;
        }
        s = advance_to(std::move(s), ts);
        arrive(s);
    }
    if (s.t < cfg.t_end - tiny) s = advance_to(std::move(s), cfg.t_end);
    return s;
}

}  // namespace ecsim

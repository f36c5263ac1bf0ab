#include <doctest.h>

#include <cmath>

#include "ecsim/operators.hpp"
#include "ecsim/scenario.hpp"

using namespace ecsim;

TEST_CASE("standing experiments are fully specified") {
    CHECK(scenario_names().size() == 5);

    ExperimentConfig s1 = scenario("S1_sharp_decay");
    CHECK(s1.n == 512);
    CHECK(s1.half_period == doctest::Approx(40.0 * kPi));
    CHECK(s1.preset == "gaussian_blob_vortex");
    CHECK(s1.t_end == doctest::Approx(10.0 * kPi));
    CHECK(s1.output_dir == "S1_sharp_decay");
    CHECK(s1.init_params.at("coupling") == 1.0);

    ExperimentConfig s4 = scenario("S4_linear_oracle");
    CHECK(s4.preset == "poisson_kernel");
    CHECK(s4.init_params.at("coupling") == 0.0);
    CHECK(s4.n == 512);

    CHECK(scenario("S2_difference_decay").n == 512);
    CHECK(scenario("S3_moment_growth").n == 512);
    CHECK(scenario("S5_property_suite").n == 256);

    CHECK_THROWS_AS(scenario("S9_bogus"), std::invalid_argument);
}

TEST_CASE("blob-plus-vortex initial data matches its closed forms") {
    ExperimentConfig cfg = scenario("S1_sharp_decay");
    SimState s = initial_state(cfg);
    const Grid& g = s.q_hat.grid;
    const double box = 4.0 * g.half_period * g.half_period;

    // mean: the blob integrates to its mass
    CHECK(s.q_hat.c[0].real() == doctest::Approx(1.0 / box).epsilon(1e-14));
    CHECK(s.q_hat.c[0].imag() == 0.0);

    // ||q0||^2 = mass^2 / (4 pi w^2) with w = 2
    const double q2 = norm_l2(s.q_hat) * norm_l2(s.q_hat);
    CHECK(q2 == doctest::Approx(1.0 / (16.0 * kPi)).epsilon(1e-8));

    // ||u0||^2 = pi a^2 (independent of the vortex width and offset)
    const double u2 = norm_l2(s.u_hat) * norm_l2(s.u_hat);
    CHECK(u2 == doctest::Approx(kPi * 0.09).epsilon(1e-8));

    CHECK(divergence_rel(s.u_hat) < 1e-13);
    CHECK(tail_fraction(s.q_hat) == 0.0);
    CHECK(s.t == 0.0);
}

TEST_CASE("poisson-kernel initial data matches its closed form") {
    ExperimentConfig cfg = scenario("S4_linear_oracle");
    cfg.n = 128;
    cfg.half_period = 8.0 * kPi;  // keep the spectral tail resolved at small n
    SimState s = initial_state(cfg);

    // ||q0||^2 = 1 / (8 pi) for coefficients exp(-|k|)
    const double q2 = norm_l2(s.q_hat) * norm_l2(s.q_hat);
    CHECK(q2 == doctest::Approx(1.0 / (8.0 * kPi)).epsilon(2e-3));
    CHECK(norm_l2(s.u_hat) == 0.0);
}

TEST_CASE("sampling is logarithmic between fixed endpoints") {
    ExperimentConfig cfg = scenario("S1_sharp_decay");
    std::vector<double> ts = sample_times(cfg);
    REQUIRE(ts.size() > 25);
    CHECK(ts.front() == 0.0);
    CHECK(ts[1] == 0.25);
    CHECK(ts.back() == cfg.t_end);
    const double ratio = std::pow(10.0, 1.0 / cfg.per_decade);
    for (std::size_t i = 2; i + 1 < ts.size(); ++i)
        CHECK(ts[i] / ts[i - 1] == doctest::Approx(ratio).epsilon(1e-12));

    int in_window = 0;
    for (double t : ts)
        if (t >= 5.0 && t <= cfg.t_end) ++in_window;
    CHECK(in_window >= 20);  // the fit windows need this many
}

TEST_CASE("a short coupled run produces monotone energy and live differences") {
    ExperimentConfig cfg = parse_config(R"({
        "grid": {"n": 64, "half_period": 25.0},
        "integrator": {"t_end": 2.0},
        "sampling": {"per_decade": 8},
        "init": {"params": {"vortex_center_x": 3.0, "vortex_width": 2.5}}
    })");
    RunResult rr = run_experiment(cfg);
    REQUIRE(rr.records.size() == sample_times(cfg).size());
    CHECK(rr.final_state.t == 2.0);

    CHECK(rr.records.front().diffq2 == 0.0);
    CHECK(rr.records.back().diffq2 > 1e-12);  // the quadratic terms act
    for (std::size_t i = 1; i < rr.energy.size(); ++i) CHECK(rr.energy[i] <= rr.energy[i - 1]);
    for (const auto& r : rr.records) CHECK(r.mean_q == rr.records.front().mean_q);
}

TEST_CASE("switching the coupling off freezes the quadratic terms") {
    ExperimentConfig cfg = parse_config(R"({
        "grid": {"n": 64, "half_period": 25.0},
        "integrator": {"t_end": 1.0},
        "sampling": {"per_decade": 8},
        "init": {"params": {"coupling": 0}}
    })");
    RunResult rr = run_experiment(cfg);
    // multi-step composition of the decay factors differs from the one-shot
    // comparison multiplier only by round-off
    for (const auto& r : rr.records) {
        CHECK(r.diffq2 <= 1e-28);
        CHECK(r.diffu2 <= 1e-28);
    }
}

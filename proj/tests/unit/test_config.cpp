#include <doctest.h>

#include <cmath>
#include <string>

#include "ecsim/config.hpp"

using namespace ecsim;

namespace {

bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

template <typename F>
std::string error_of(F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("empty document yields the documented defaults") {
    ExperimentConfig c = parse_config("{}");
    CHECK(c.n == 256);
    CHECK(c.half_period == doctest::Approx(40.0 * kPi).epsilon(1e-15));
    CHECK(c.preset == "gaussian_blob_vortex");
    CHECK(c.dt_max == 0.05);
    CHECK(c.cfl == 0.4);
    CHECK(c.t_end == doctest::Approx(10.0 * kPi).epsilon(1e-15));
    CHECK(c.per_decade == 32);
    CHECK(c.splitting_r == 4.0);
    CHECK(c.seed == 12345);
    CHECK(c.output_dir == "out");
    CHECK(c.probe_modes == default_probe_modes());

    CHECK(c.init_params.at("mass") == 1.0);
    CHECK(c.init_params.at("width") == 2.0);
    CHECK(c.init_params.at("vortex_amplitude") == 0.3);
    CHECK(c.init_params.at("vortex_width") == 5.0);
    CHECK(c.init_params.at("vortex_center_x") == 6.0);
    CHECK(c.init_params.at("coupling") == 1.0);
}

TEST_CASE("end time defaults to a quarter of the half period") {
    ExperimentConfig c = parse_config(R"({"grid": {"half_period": 80.0}})");
    CHECK(c.t_end == doctest::Approx(20.0).epsilon(1e-15));

    ExperimentConfig c2 = parse_config(R"({"grid": {"half_period": 80.0},
                                           "integrator": {"t_end": 7.5}})");
    CHECK(c2.t_end == 7.5);
}

TEST_CASE("errors name the offending key path") {
    CHECK(error_of([] { parse_config(R"({"grid": {"n": 15}})"); }).find("grid.n") !=
          std::string::npos);
    CHECK(error_of([] { parse_config(R"({"grid": {"m": 4}})"); }).find("grid.m") !=
          std::string::npos);
    CHECK(error_of([] { parse_config(R"({"integrator": {"cfl": 1.5}})"); }).find("cfl") !=
          std::string::npos);
    CHECK(error_of([] { parse_config(R"({"sampling": {"per_decade": 0}})"); })
              .find("per_decade") != std::string::npos);
    CHECK(error_of([] { parse_config("not json at all"); }).find("invalid JSON") !=
          std::string::npos);
}

TEST_CASE("unknown presets are rejected with the known names listed") {
    try {
        parse_config(R"({"init": {"preset": "bogus"}})");
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "bogus"));
        CHECK(mentions(e, "gaussian_blob_vortex"));
        CHECK(mentions(e, "poisson_kernel"));
    }
}

TEST_CASE("preset parameters merge over registry defaults") {
    ExperimentConfig c =
        parse_config(R"({"init": {"preset": "gaussian_blob_vortex", "params": {"width": 3.0}}})");
    CHECK(c.init_params.at("width") == 3.0);
    CHECK(c.init_params.at("mass") == 1.0);

    CHECK_THROWS_AS(parse_config(R"({"init": {"params": {"no_such": 1.0}}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"init": {"params": {"coupling": 0.5}}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"init": {"params": {"width": -1.0}}})"),
                    std::invalid_argument);
}

TEST_CASE("probe modes are validated against the resolved band") {
    CHECK_THROWS_AS(parse_config(R"({"probes": {"modes": [[0, 0]]}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"probes": {"modes": []}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"n": 16}, "probes": {"modes": [[200, 0]]}})"),
                    std::invalid_argument);
    ExperimentConfig c = parse_config(R"({"probes": {"modes": [[3, -2]]}})");
    REQUIRE(c.probe_modes.size() == 1);
    CHECK(c.probe_modes[0][0] == 3);
    CHECK(c.probe_modes[0][1] == -2);
}

TEST_CASE("serialization round trips to the same configuration") {
    const std::string doc = R"({
        "grid": {"n": 128, "half_period": 50.0},
        "init": {"preset": "poisson_kernel", "params": {"scale": 2.0}},
        "integrator": {"dt_max": 0.02, "cfl": 0.3, "t_end": 4.0},
        "sampling": {"per_decade": 16},
        "splitting": {"r": 6.0},
        "probes": {"modes": [[1, 0], [2, 2]]},
        "seed": 777,
        "output": {"dir": "elsewhere"}
    })";
    ExperimentConfig c = parse_config(doc);
    CHECK(c.n == 128);
    CHECK(c.init_params.at("scale") == 2.0);
    CHECK(c.seed == 777);

    ExperimentConfig back = parse_config(serialize_config(c));
    CHECK(back == c);

    ExperimentConfig defaults = parse_config("{}");
    CHECK(parse_config(serialize_config(defaults)) == defaults);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ecsim/scenario.hpp"
#include "ecsim/series_io.hpp"

using namespace ecsim;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    fs::path p = fs::temp_directory_path() / "ecsim_io_test";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("empty series writes just the header") {
    fs::path p = scratch() / "empty.csv";
    emit_series({}, p.string());
    CHECK(slurp(p) == std::string(kSeriesHeader) + "\n");
    CHECK(read_series(p.string()).empty());
}

TEST_CASE("series round trips bit-exactly through text") {
    TimeSeriesRecord a;
    a.t = 0.1234567890123456789;
    a.l2q2 = 1e-300;
    a.l2u2 = 7.123456789012345e+17;
    a.l4q4 = 0.0;
    a.h1q2 = -3.5e-7;  // not physical, but the format must carry it
    a.moment = 2.0 / 3.0;
    a.mean_q = 9.894646840072048e-05;
    a.probe_v_max = 5e-324;  // subnormal
    TimeSeriesRecord b;
    b.t = 31.41592653589793;
    b.shell_high_q = 1.7976931348623157e308;

    fs::path p = scratch() / "roundtrip.csv";
    emit_series({a, b}, p.string());
    auto back = read_series(p.string());
    REQUIRE(back.size() == 2);

    const std::vector<std::string> cols = {
        "l2q2", "l2u2",  "l4q4",   "h1q2",   "h1u2",        "h2q2",        "h2u2",
        "w14u", "moment", "mean_q", "diffq2", "diffu2",      "shell_low_q", "shell_high_q",
        "probe_zeta_max", "probe_v_max"};
    CHECK(back[0].t == a.t);
    CHECK(back[1].t == b.t);
    for (const auto& col : cols) {
        CHECK(series_value(back[0], col) == series_value(a, col));
        CHECK(series_value(back[1], col) == series_value(b, col));
    }
    CHECK_THROWS_AS(series_value(a, "no_such_column"), std::invalid_argument);
}

TEST_CASE("series reader rejects malformed input") {
    fs::path p = scratch() / "bad_header.csv";
    {
        std::ofstream out(p);
        out << "t,l2q2\n0,1\n";
    }
    CHECK_THROWS_AS(read_series(p.string()), std::invalid_argument);

    fs::path p2 = scratch() / "bad_row.csv";
    {
        std::ofstream out(p2);
        out << kSeriesHeader << "\n";
        out << "0,1,2\n";  // wrong column count on line 2
    }
    try {
        read_series(p2.string());
        FAIL("expected a throw");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }

    CHECK_THROWS_AS(read_series((scratch() / "absent.csv").string()), std::invalid_argument);
}

TEST_CASE("energy trace round trips") {
    EnergyTrace tr;
    tr.t = {0.0, 0.5, 1.0};
    tr.energy = {3.0, 2.5, 2.25};
    tr.dissipation = {1.0, 0.5, 0.25};
    fs::path p = scratch() / "energy.json";
    write_energy_trace(tr, p.string());
    EnergyTrace back = read_energy_trace(p.string());
    CHECK(back.t == tr.t);
    CHECK(back.energy == tr.energy);
    CHECK(back.dissipation == tr.dissipation);
}

TEST_CASE("checkpoints round trip bitwise and reject corruption") {
    ExperimentConfig cfg = parse_config(R"({
        "grid": {"n": 64, "half_period": 25.0},
        "integrator": {"t_end": 0.5},
        "sampling": {"per_decade": 8}
    })");
    SimState s = initial_state(cfg);
    s.t = 0.375;

    fs::path p = scratch() / "state.ck";
    save_checkpoint(s, p.string());
    SimState back = load_checkpoint(p.string());
    CHECK(back.t == s.t);
    REQUIRE(back.q_hat.grid == s.q_hat.grid);
    bool same = true;
    for (std::size_t i = 0; i < s.q_hat.grid.size(); ++i) {
        same = same && back.q_hat.c[i] == s.q_hat.c[i];
        same = same && back.u_hat.c1.c[i] == s.u_hat.c1.c[i];
        same = same && back.u_hat.c2.c[i] == s.u_hat.c2.c[i];
    }
    CHECK(same);

    // flip one magic byte
    std::string bytes = slurp(p);
    bytes[2] ^= 0x40;
    fs::path pm = scratch() / "bad_magic.ck";
    {
        std::ofstream out(pm, std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
    CHECK_THROWS_AS(load_checkpoint(pm.string()), std::invalid_argument);

    // truncate the payload
    fs::path pt = scratch() / "truncated.ck";
    {
        std::string cut = slurp(p).substr(0, 200);
        std::ofstream out(pt, std::ios::binary);
        out.write(cut.data(), static_cast<std::streamsize>(cut.size()));
    }
    CHECK_THROWS_AS(load_checkpoint(pt.string()), std::invalid_argument);

    // trailing garbage
    fs::path pg = scratch() / "trailing.ck";
    {
        std::string padded = slurp(p) + "junk";
        std::ofstream out(pg, std::ios::binary);
        out.write(padded.data(), static_cast<std::streamsize>(padded.size()));
    }
    CHECK_THROWS_AS(load_checkpoint(pg.string()), std::invalid_argument);
}

TEST_CASE("repeated runs emit identical bytes") {
    ExperimentConfig cfg = parse_config(R"({
        "grid": {"n": 64, "half_period": 25.0},
        "integrator": {"t_end": 1.0},
        "sampling": {"per_decade": 8}
    })");
    RunResult r1 = run_experiment(cfg);
    RunResult r2 = run_experiment(cfg);

    fs::path p1 = scratch() / "run1.csv";
    fs::path p2 = scratch() / "run2.csv";
    emit_series(r1.records, p1.string());
    emit_series(r2.records, p2.string());
    CHECK(slurp(p1) == slurp(p2));
    CHECK(!r1.records.empty());
}

// Acceptance gate: regenerates every scenario output, then evaluates all ten
// criteria and prints one PASS/FAIL line per criterion. Exit 0 iff all pass.
//
//   acceptance_main [out_dir] [--reuse]
//
// --reuse skips any scenario whose output files already exist in out_dir,
// which makes re-evaluation cheap while iterating on single scenarios.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "ecsim/acceptance.hpp"
#include "ecsim/checks.hpp"
#include "ecsim/series_io.hpp"

namespace fs = std::filesystem;
using namespace ecsim;

namespace {

bool have(const std::string& dir, std::initializer_list<const char*> files) {
    for (const char* f : files)
        if (!fs::exists(dir + "/" + f)) return false;
    return true;
}

void run_and_emit(const ExperimentConfig& cfg, const std::string& dir, const std::string& stem) {
    RunResult rr = run_experiment(cfg);
    emit_series(rr.records, dir + "/" + stem + ".csv");
    EnergyTrace tr;
    for (const auto& r : rr.records) tr.t.push_back(r.t);
    tr.energy = rr.energy;
    tr.dissipation = rr.dissipation;
    write_energy_trace(tr, dir + "/" + stem + "_energy.json");
    std::printf("  %s: %zu samples to t=%.6g\n", stem.c_str(), rr.records.size(), cfg.t_end);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = "acceptance_out";
    bool reuse = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--reuse")
            reuse = true;
        else
            dir = arg;
    }
    fs::create_directories(dir);

    try {
        for (const char* name : {"S1_sharp_decay", "S2_difference_decay", "S3_moment_growth",
                                 "S4_linear_oracle"}) {
            const std::string stem = name;
            std::vector<std::string> needed = {stem + ".csv", stem + "_energy.json"};
            if (stem == "S2_difference_decay") {
                needed.push_back(stem + "_half.csv");
                needed.push_back(stem + "_half_energy.json");
            }
            bool present = true;
            for (const auto& f : needed) present = present && fs::exists(dir + "/" + f);
            if (reuse && present) {
                std::printf("  %s: reusing existing output\n", name);
                continue;
            }
            std::printf("running %s ...\n", name);
            std::fflush(stdout);
            ExperimentConfig cfg = scenario(name);
            run_and_emit(cfg, dir, stem);
            if (stem == "S2_difference_decay") {
                ExperimentConfig half = cfg;
                half.n = cfg.n / 2;
                run_and_emit(half, dir, stem + "_half");
            }
        }

        if (!(reuse && have(dir, {"S5_property_suite.json"}))) {
            std::printf("running S5_property_suite ...\n");
            std::fflush(stdout);
            ExperimentConfig cfg = scenario("S5_property_suite");
            PropertySuite suite;
            suite.identity = operator_identity_suite(cfg.seed, 256, 2.0 * kPi, 100);
            suite.inequality = inequality_suite(cfg.seed);
            write_property_suite(suite, dir + "/S5_property_suite.json");
        }

        if (!(reuse && have(dir, {"order_check.json"}))) {
            std::printf("running integrator order study ...\n");
            std::fflush(stdout);
            write_order_check(run_order_check(), dir + "/order_check.json");
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "pipeline failed: %s\n", e.what());
        return 2;
    }

    AcceptanceReport rep = evaluate_acceptance(dir);
    if (!rep.missing.empty()) {
        for (const auto& f : rep.missing) std::printf("missing input: %s/%s\n", dir.c_str(), f.c_str());
        return 2;
    }
    for (const auto& c : rep.criteria)
        std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    write_acceptance_report(rep, dir + "/acceptance_report.json");
    std::printf("%s\n", rep.all_pass ? "ACCEPTED" : "REJECTED");
    return rep.all_pass ? 0 : 1;
}

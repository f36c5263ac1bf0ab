#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "ecsim/acceptance.hpp"
#include "ecsim/checks.hpp"
#include "ecsim/series_io.hpp"

namespace fs = std::filesystem;
using namespace ecsim;

namespace {

// Exit codes: 0 success, 1 criterion/check failure, 2 missing or invalid
// input, 3 runtime blow-up.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;
constexpr int kBlowup = 3;

EnergyTrace make_trace(const RunResult& rr) {
    EnergyTrace tr;
    for (const auto& r : rr.records) tr.t.push_back(r.t);
    tr.energy = rr.energy;
    tr.dissipation = rr.dissipation;
    return tr;
}

void write_run_outputs(const RunResult& rr, const std::string& dir, const std::string& stem) {
    fs::create_directories(dir);
    emit_series(rr.records, dir + "/" + stem + ".csv");
    write_energy_trace(make_trace(rr), dir + "/" + stem + "_energy.json");
}

void print_reports(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        std::printf("[%s] %-22s worst=%-12.5g drift=%-8.3g trials=%d n=%d\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.drift, r.n_trials, r.n);
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

int cmd_run(const std::string& config_path, const std::string& checkpoint_out,
            const std::string& resume) {
    ExperimentConfig cfg = load_config_file(config_path);
    RunResult rr = resume.empty() ? run_experiment(cfg)
                                  : run_experiment(cfg, load_checkpoint(resume));
    write_run_outputs(rr, cfg.output_dir, "series");
    if (!checkpoint_out.empty()) save_checkpoint(rr.final_state, checkpoint_out);
    std::printf("run complete: t=%.6g, %zu samples, ||q||^2=%.6g -> %s/series.csv\n",
                rr.final_state.t, rr.records.size(),
                rr.records.empty() ? 0.0 : rr.records.back().l2q2, cfg.output_dir.c_str());
    return kOk;
}

int cmd_scenario(const std::string& name, std::string out_dir) {
    ExperimentConfig cfg = scenario(name);
    if (out_dir.empty()) out_dir = cfg.output_dir;
    fs::create_directories(out_dir);

    if (name == "S5_property_suite") {
        PropertySuite suite;
        suite.identity = operator_identity_suite(cfg.seed, 256, 2.0 * kPi, 100);
        suite.inequality = inequality_suite(cfg.seed);
        print_reports(suite.identity);
        print_reports(suite.inequality);
        write_property_suite(suite, out_dir + "/" + name + ".json");
        std::printf("wrote %s/%s.json\n", out_dir.c_str(), name.c_str());
        return kOk;
    }

    RunResult rr = run_experiment(cfg);
    write_run_outputs(rr, out_dir, name);
    std::printf("%s: %zu samples to t=%.6g -> %s/%s.csv\n", name.c_str(), rr.records.size(),
                cfg.t_end, out_dir.c_str(), name.c_str());
    if (name == "S2_difference_decay") {
        ExperimentConfig half = cfg;
        half.n = cfg.n / 2;
        RunResult rh = run_experiment(half);
        write_run_outputs(rh, out_dir, name + "_half");
        std::printf("%s_half: companion run at n=%d -> %s/%s_half.csv\n", name.c_str(), half.n,
                    out_dir.c_str(), name.c_str());
    }
    return kOk;
}

int cmd_fit(const std::string& csv, const std::string& col, const std::string& window) {
    double a = 0.0, b = 0.0;
    if (std::sscanf(window.c_str(), "%lf,%lf", &a, &b) != 2)
        throw std::invalid_argument("fit: --window expects 'a,b'");
    auto series = read_series(csv);
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : series) pts.push_back({r.t, series_value(r, col)});
    FitResult fit = fit_exponent(pts, a, b);
    std::printf("column=%s window=[%g,%g] slope=%.6f intercept=%.6f n=%d rms=%.3g\n", col.c_str(),
                fit.t_lo, fit.t_hi, fit.slope, fit.intercept, fit.n_samples, fit.rms_residual);
    return kOk;
}

int cmd_check(const std::string& suite, std::uint64_t seed, int n, int trials,
              const std::string& out) {
    if (suite == "operators") {
        auto reports = operator_identity_suite(seed, n, 2.0 * kPi, trials);
        print_reports(reports);
        if (!out.empty()) write_property_suite({reports, {}}, out);
        return all_pass(reports) ? kOk : kFail;
    }
    if (suite == "inequalities") {
        auto reports = inequality_suite(seed);
        print_reports(reports);
        if (!out.empty()) write_property_suite({{}, reports}, out);
        return all_pass(reports) ? kOk : kFail;
    }
    if (suite == "order") {
        OrderCheck oc = run_order_check();
        std::printf("state errors: %.6g (dt=%.4g) %.6g (dt=%.4g), ratio %.3f\n", oc.state_error[0],
                    oc.dts[0], oc.state_error[1], oc.dts[1], oc.state_ratio);
        std::printf("energy residuals: %.6g %.6g, ratio %.3f\n", oc.residual[0], oc.residual[1],
                    oc.residual_ratio);
        if (!out.empty()) write_order_check(oc, out);
        const bool ok = oc.state_ratio >= 3.0 && oc.state_ratio <= 5.0 &&
                        oc.residual_ratio >= 3.0 && oc.residual_ratio <= 5.0;
        return ok ? kOk : kFail;
    }
    throw std::invalid_argument("check: unknown suite '" + suite +
                                "' (valid: operators, inequalities, order)");
}

int cmd_accept(const std::string& dir) {
    AcceptanceReport rep = evaluate_acceptance(dir);
    if (!rep.missing.empty()) {
        for (const auto& f : rep.missing) std::printf("missing input: %s/%s\n", dir.c_str(), f.c_str());
        return kBadInput;
    }
    for (const auto& c : rep.criteria)
        std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    write_acceptance_report(rep, dir + "/acceptance_report.json");
    std::printf("%s (report: %s/acceptance_report.json)\n",
                rep.all_pass ? "ACCEPTED" : "REJECTED", dir.c_str());
    return rep.all_pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral simulator and verification harness for the coupled "
                 "charge-transport / Navier-Stokes system"};
    app.require_subcommand(1);

    std::string config_path, checkpoint_out, resume;
    auto* run_cmd = app.add_subcommand("run", "integrate a config and write series outputs");
    run_cmd->add_option("config", config_path, "config JSON file")->required();
    run_cmd->add_option("--checkpoint-out", checkpoint_out, "write final state here");
    run_cmd->add_option("--resume", resume, "start from a checkpoint instead of the preset");

    std::string scen_name, scen_out;
    auto* scen_cmd = app.add_subcommand("scenario", "run a named standing experiment");
    scen_cmd->add_option("name", scen_name, "scenario name")->required();
    scen_cmd->add_option("--out", scen_out, "output directory (default: scenario name)");

    std::string fit_csv, fit_col, fit_window;
    auto* fit_cmd = app.add_subcommand("fit", "least-squares decay exponent of a series column");
    fit_cmd->add_option("csv", fit_csv, "series CSV")->required();
    fit_cmd->add_option("--column", fit_col, "column name")->required();
    fit_cmd->add_option("--window", fit_window, "fit window 'a,b'")->required();

    std::string check_suite, check_out;
    std::uint64_t check_seed = 12345;
    int check_n = 256, check_trials = 100;
    auto* check_cmd = app.add_subcommand("check", "run a verification suite");
    check_cmd->add_option("suite", check_suite, "operators | inequalities | order")->required();
    check_cmd->add_option("--seed", check_seed, "base seed");
    check_cmd->add_option("--n", check_n, "resolution for the operator suite");
    check_cmd->add_option("--trials", check_trials, "trials for the operator suite");
    check_cmd->add_option("--out", check_out, "write the JSON report here");

    std::string accept_dir;
    auto* accept_cmd = app.add_subcommand("accept", "evaluate the acceptance gate on a directory");
    accept_cmd->add_option("dir", accept_dir, "directory with scenario outputs")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(config_path, checkpoint_out, resume);
        if (scen_cmd->parsed()) return cmd_scenario(scen_name, scen_out);
        if (fit_cmd->parsed()) return cmd_fit(fit_csv, fit_col, fit_window);
        if (check_cmd->parsed())
            return cmd_check(check_suite, check_seed, check_n, check_trials, check_out);
        if (accept_cmd->parsed()) return cmd_accept(accept_dir);
    } catch (const BlowupError& e) {
        std::fprintf(stderr, "blow-up: %s (last good t=%.6g)\n", e.what(), e.last_good_t);
        return kBlowup;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadInput;
    }
    return kBadInput;
}

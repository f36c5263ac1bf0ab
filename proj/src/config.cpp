#include "ecsim/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ecsim {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw std::invalid_argument("config: " + key + ": " + what);
}

void expect_object(const json& v, const std::string& key) {
    if (!v.is_object()) fail(key, "expected an object");
}

void expect_keys(const json& obj, const std::string& prefix,
                 std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) fail(prefix.empty() ? it.key() : prefix + "." + it.key(), "unknown key");
    }
}

double get_number(const json& v, const std::string& key) {
    if (!v.is_number()) fail(key, "expected a number");
    return v.get<double>();
}

int get_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<int>();
}

std::string get_string(const json& v, const std::string& key) {
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
}

}  // namespace

const std::map<std::string, std::map<std::string, double>>& preset_registry() {
    static const std::map<std::string, std::map<std::string, double>> presets = {
        {"gaussian_blob_vortex",
         {{"mass", 1.0},
          {"width", 2.0},
          {"vortex_amplitude", 0.3},
          {"vortex_width", 5.0},
          {"vortex_center_x", 6.0},
          {"vortex_center_y", 0.0},
          {"coupling", 1.0}}},
        {"poisson_kernel", {{"scale", 1.0}, {"coupling", 0.0}}},
    };
    return presets;
}

ProbeModes default_probe_modes() {
    return {{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {2, 0}, {0, 2}};
}

ExperimentConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config: top level must be an object");
    expect_keys(doc, "",
                {"grid", "init", "integrator", "sampling", "splitting", "probes", "seed", "output"});

    ExperimentConfig cfg;
    cfg.probe_modes = default_probe_modes();

    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        expect_object(g, "grid");
        expect_keys(g, "grid", {"n", "half_period"});
        if (g.contains("n")) {
            cfg.n = get_int(g["n"], "grid.n");
            if (cfg.n % 2 != 0 || cfg.n < 16 || cfg.n > 16384)
                fail("grid.n", "must be even and in [16, 16384]");
        }
        if (g.contains("half_period")) {
            cfg.half_period = get_number(g["half_period"], "grid.half_period");
            if (!(cfg.half_period > 0.0)) fail("grid.half_period", "must be positive");
        }
    }
    cfg.t_end = cfg.half_period / 4.0;

    if (doc.contains("init")) {
        const json& ini = doc["init"];
        expect_object(ini, "init");
        expect_keys(ini, "init", {"preset", "params"});
        if (ini.contains("preset")) cfg.preset = get_string(ini["preset"], "init.preset");
    }
    auto preset_it = preset_registry().find(cfg.preset);
    if (preset_it == preset_registry().end()) {
        std::string names;
        for (const auto& [k, v] : preset_registry()) names += (names.empty() ? "" : ", ") + k;
        fail("init.preset", "unknown preset '" + cfg.preset + "' (known: " + names + ")");
    }
    cfg.init_params = preset_it->second;
    if (doc.contains("init") && doc["init"].contains("params")) {
        const json& p = doc["init"]["params"];
        expect_object(p, "init.params");
        for (auto it = p.begin(); it != p.end(); ++it) {
            const std::string key = "init.params." + it.key();
            if (!cfg.init_params.count(it.key()))
                fail(key, "not a parameter of preset '" + cfg.preset + "'");
            cfg.init_params[it.key()] = get_number(it.value(), key);
        }
        for (const char* k : {"width", "vortex_width", "scale"})
            if (cfg.init_params.count(k) && !(cfg.init_params[k] > 0.0))
                fail(std::string("init.params.") + k, "must be positive");
        const double c = cfg.init_params.at("coupling");
        if (c != 0.0 && c != 1.0) fail("init.params.coupling", "must be 0 or 1");
    }

    if (doc.contains("integrator")) {
        const json& in = doc["integrator"];
        expect_object(in, "integrator");
        expect_keys(in, "integrator", {"dt_max", "cfl", "t_end"});
        if (in.contains("dt_max")) {
            cfg.dt_max = get_number(in["dt_max"], "integrator.dt_max");
            if (!(cfg.dt_max > 0.0)) fail("integrator.dt_max", "must be positive");
        }
        if (in.contains("cfl")) {
            cfg.cfl = get_number(in["cfl"], "integrator.cfl");
            if (!(cfg.cfl > 0.0) || cfg.cfl > 1.0) fail("integrator.cfl", "must be in (0, 1]");
        }
        if (in.contains("t_end")) {
            cfg.t_end = get_number(in["t_end"], "integrator.t_end");
            if (!(cfg.t_end > 0.0)) fail("integrator.t_end", "must be positive");
        }
    }

    if (doc.contains("sampling")) {
        const json& s = doc["sampling"];
        expect_object(s, "sampling");
        expect_keys(s, "sampling", {"per_decade"});
        if (s.contains("per_decade")) {
            cfg.per_decade = get_int(s["per_decade"], "sampling.per_decade");
            if (cfg.per_decade < 1) fail("sampling.per_decade", "must be >= 1");
        }
    }

    if (doc.contains("splitting")) {
        const json& s = doc["splitting"];
        expect_object(s, "splitting");
        expect_keys(s, "splitting", {"r"});
        if (s.contains("r")) {
            cfg.splitting_r = get_number(s["r"], "splitting.r");
            if (!(cfg.splitting_r > 0.0)) fail("splitting.r", "must be positive");
        }
    }

    if (doc.contains("probes")) {
        const json& p = doc["probes"];
        expect_object(p, "probes");
        expect_keys(p, "probes", {"modes"});
        if (p.contains("modes")) {
            const json& ms = p["modes"];
            if (!ms.is_array() || ms.empty()) fail("probes.modes", "expected a non-empty array");
            cfg.probe_modes.clear();
            for (std::size_t i = 0; i < ms.size(); ++i) {
                const std::string key = "probes.modes[" + std::to_string(i) + "]";
                const json& m = ms[i];
                if (!m.is_array() || m.size() != 2) fail(key, "expected a pair [m1, m2]");
                const int m1 = get_int(m[0], key), m2 = get_int(m[1], key);
                if (m1 == 0 && m2 == 0) fail(key, "zero mode not allowed");
                if (3 * std::max(std::abs(m1), std::abs(m2)) > cfg.n)
                    fail(key, "outside the resolved band for n=" + std::to_string(cfg.n));
                cfg.probe_modes.push_back({m1, m2});
            }
        }
    }

    if (doc.contains("seed")) {
        const json& s = doc["seed"];
        if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() &&
                                       s.get<std::int64_t>() < 0))
            fail("seed", "expected a non-negative integer");
        cfg.seed = s.get<std::uint64_t>();
    }

    if (doc.contains("output")) {
        const json& o = doc["output"];
        expect_object(o, "output");
        expect_keys(o, "output", {"dir"});
        if (o.contains("dir")) {
            cfg.output_dir = get_string(o["dir"], "output.dir");
            if (cfg.output_dir.empty()) fail("output.dir", "must be non-empty");
        }
    }

    return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
    ordered_json doc;
    doc["grid"] = {{"n", cfg.n}, {"half_period", cfg.half_period}};
    doc["init"]["preset"] = cfg.preset;
    doc["init"]["params"] = ordered_json::object();
    for (const auto& [k, v] : cfg.init_params) doc["init"]["params"][k] = v;
    doc["integrator"] = {{"dt_max", cfg.dt_max}, {"cfl", cfg.cfl}, {"t_end", cfg.t_end}};
    doc["sampling"] = {{"per_decade", cfg.per_decade}};
    doc["splitting"] = {{"r", cfg.splitting_r}};
    ordered_json modes = ordered_json::array();
    for (const auto& m : cfg.probe_modes) modes.push_back({m[0], m[1]});
    doc["probes"] = {{"modes", modes}};
    doc["seed"] = cfg.seed;
    doc["output"] = {{"dir", cfg.output_dir}};
    return doc.dump(2) + "\n";
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace ecsim

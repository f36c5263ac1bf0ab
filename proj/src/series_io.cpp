#include "ecsim/series_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little,
              "checkpoint payload is written as native little-endian doubles");

namespace ecsim {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr char kCheckpointMagic[8] = {'E', 'C', 'S', 'T', 'A', 'T', 'E', '\0'};
constexpr std::uint32_t kCheckpointVersion = 1;

std::vector<double> row_values(const TimeSeriesRecord& r) {
    return {r.t,      r.l2q2,        r.l2u2,         r.l4q4,           r.h1q2,
            r.h1u2,   r.h2q2,        r.h2u2,         r.w14u,           r.moment,
            r.mean_q, r.diffq2,      r.diffu2,       r.shell_low_q,    r.shell_high_q,
            r.probe_zeta_max, r.probe_v_max};
}

ordered_json report_to_json(const CheckReport& r) {
    return ordered_json{{"name", r.name},   {"n_trials", r.n_trials},
                        {"worst", r.worst}, {"drift", r.drift},
                        {"seed", r.seed},   {"n", r.n},
                        {"half_period", r.half_period}, {"pass", r.pass}};
}

CheckReport report_from_json(const json& j) {
    CheckReport r;
    r.name = j.at("name").get<std::string>();
    r.n_trials = j.at("n_trials").get<int>();
    r.worst = j.at("worst").get<double>();
    r.drift = j.at("drift").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.n = j.at("n").get<int>();
    r.half_period = j.at("half_period").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string(what) + ": cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + path + ": " + e.what());
    }
    return doc;
}

void write_text_file(const std::string& path, const std::string& text, const char* what) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument(std::string(what) + ": cannot open " + path);
    out << text;
    if (!out) throw std::runtime_error(std::string(what) + ": write failed for " + path);
}

}  // namespace

void emit_series(const std::vector<TimeSeriesRecord>& records, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::invalid_argument("emit_series: cannot open " + path);
    std::fprintf(f, "%s\n", kSeriesHeader);
    for (const auto& r : records) {
        const auto vals = row_values(r);
        for (std::size_t i = 0; i < vals.size(); ++i)
            std::fprintf(f, "%.17g%c", vals[i], i + 1 < vals.size() ? ',' : '\n');
    }
    if (std::fclose(f) != 0) throw std::runtime_error("emit_series: write failed for " + path);
}

std::vector<TimeSeriesRecord> read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("read_series: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("read_series: empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSeriesHeader)
        throw std::invalid_argument("read_series: unexpected header in " + path);
    std::vector<TimeSeriesRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double v[17];
        const char* p = line.c_str();
        for (int i = 0; i < 17; ++i) {
            char* end = nullptr;
            v[i] = std::strtod(p, &end);
            if (end == p)
                throw std::invalid_argument("read_series: bad number at " + path + ":" +
                                            std::to_string(lineno));
            p = end;
            if (i < 16) {
                if (*p != ',')
                    throw std::invalid_argument("read_series: expected comma at " + path + ":" +
                                                std::to_string(lineno));
                ++p;
            }
        }
        if (*p != '\0')
            throw std::invalid_argument("read_series: trailing data at " + path + ":" +
                                        std::to_string(lineno));
        TimeSeriesRecord r;
        r.t = v[0];
        r.l2q2 = v[1];
        r.l2u2 = v[2];
        r.l4q4 = v[3];
        r.h1q2 = v[4];
        r.h1u2 = v[5];
        r.h2q2 = v[6];
        r.h2u2 = v[7];
        r.w14u = v[8];
        r.moment = v[9];
        r.mean_q = v[10];
        r.diffq2 = v[11];
        r.diffu2 = v[12];
        r.shell_low_q = v[13];
        r.shell_high_q = v[14];
        r.probe_zeta_max = v[15];
        r.probe_v_max = v[16];
        out.push_back(r);
    }
    return out;
}

double series_value(const TimeSeriesRecord& r, const std::string& column) {
    if (column == "l2q2") return r.l2q2;
    if (column == "l2u2") return r.l2u2;
    if (column == "l4q4") return r.l4q4;
    if (column == "h1q2") return r.h1q2;
    if (column == "h1u2") return r.h1u2;
    if (column == "h2q2") return r.h2q2;
    if (column == "h2u2") return r.h2u2;
    if (column == "w14u") return r.w14u;
    if (column == "moment") return r.moment;
    if (column == "mean_q") return r.mean_q;
    if (column == "diffq2") return r.diffq2;
    if (column == "diffu2") return r.diffu2;
    if (column == "shell_low_q") return r.shell_low_q;
    if (column == "shell_high_q") return r.shell_high_q;
    if (column == "probe_zeta_max") return r.probe_zeta_max;
    if (column == "probe_v_max") return r.probe_v_max;
    throw std::invalid_argument("series_value: unknown column '" + column + "'");
}

void write_energy_trace(const EnergyTrace& trace, const std::string& path) {
    ordered_json doc;
    doc["t"] = trace.t;
    doc["energy"] = trace.energy;
    doc["dissipation"] = trace.dissipation;
    write_text_file(path, doc.dump(2) + "\n", "write_energy_trace");
}

EnergyTrace read_energy_trace(const std::string& path) {
    const json doc = load_json_file(path, "read_energy_trace");
    EnergyTrace tr;
    tr.t = doc.at("t").get<std::vector<double>>();
    tr.energy = doc.at("energy").get<std::vector<double>>();
    tr.dissipation = doc.at("dissipation").get<std::vector<double>>();
    if (tr.t.size() != tr.energy.size() || tr.t.size() != tr.dissipation.size())
        throw std::invalid_argument("read_energy_trace: ragged arrays in " + path);
    return tr;
}

void write_property_suite(const PropertySuite& suite, const std::string& path) {
    ordered_json doc;
    doc["identity"] = json::array();
    for (const auto& r : suite.identity) doc["identity"].push_back(report_to_json(r));
    doc["inequality"] = json::array();
    for (const auto& r : suite.inequality) doc["inequality"].push_back(report_to_json(r));
    write_text_file(path, doc.dump(2) + "\n", "write_property_suite");
}

PropertySuite read_property_suite(const std::string& path) {
    const json doc = load_json_file(path, "read_property_suite");
    PropertySuite suite;
    for (const auto& j : doc.at("identity")) suite.identity.push_back(report_from_json(j));
    for (const auto& j : doc.at("inequality")) suite.inequality.push_back(report_from_json(j));
    return suite;
}

void write_order_check(const OrderCheck& oc, const std::string& path) {
    ordered_json doc;
    doc["dts"] = oc.dts;
    doc["dt_ref"] = oc.dt_ref;
    doc["state_error"] = oc.state_error;
    doc["residual"] = oc.residual;
    doc["state_ratio"] = oc.state_ratio;
    doc["residual_ratio"] = oc.residual_ratio;
    write_text_file(path, doc.dump(2) + "\n", "write_order_check");
}

OrderCheck read_order_check(const std::string& path) {
    const json doc = load_json_file(path, "read_order_check");
    OrderCheck oc;
    oc.dts = doc.at("dts").get<std::vector<double>>();
    oc.dt_ref = doc.at("dt_ref").get<double>();
    oc.state_error = doc.at("state_error").get<std::vector<double>>();
    oc.residual = doc.at("residual").get<std::vector<double>>();
    oc.state_ratio = doc.at("state_ratio").get<double>();
    oc.residual_ratio = doc.at("residual_ratio").get<double>();
    return oc;
}

void save_checkpoint(const SimState& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("save_checkpoint: cannot open " + path);
    const Grid& g = s.q_hat.grid;
    const std::uint32_t n = static_cast<std::uint32_t>(g.n);
    out.write(kCheckpointMagic, sizeof(kCheckpointMagic));
    out.write(reinterpret_cast<const char*>(&kCheckpointVersion), sizeof(kCheckpointVersion));
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(&g.half_period), sizeof(double));
    out.write(reinterpret_cast<const char*>(&s.t), sizeof(double));
    auto dump = [&](const SpectralScalar& f) {
        out.write(reinterpret_cast<const char*>(f.c.data()),
                  static_cast<std::streamsize>(f.c.size() * sizeof(cplx)));
    };
    dump(s.q_hat);
    dump(s.u_hat.c1);
    dump(s.u_hat.c2);
    if (!out) throw std::runtime_error("save_checkpoint: write failed for " + path);
}

SimState load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("load_checkpoint: cannot open " + path);
    char magic[8];
    std::uint32_t version = 0, n = 0;
    double half_period = 0.0, t = 0.0;
    in.read(magic, sizeof(magic));
    in.read(reinterpret_cast<char*>(&version), sizeof(version));
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    in.read(reinterpret_cast<char*>(&half_period), sizeof(half_period));
    in.read(reinterpret_cast<char*>(&t), sizeof(t));
    if (!in || std::memcmp(magic, kCheckpointMagic, sizeof(magic)) != 0)
        throw std::invalid_argument("load_checkpoint: not a checkpoint file: " + path);
    if (version != kCheckpointVersion)
        throw std::invalid_argument("load_checkpoint: unsupported version in " + path);
    Grid g(static_cast<int>(n), half_period);
    SimState s(t, SpectralScalar(g), SpectralVector(g));
    auto slurp = [&](SpectralScalar& f) {
        in.read(reinterpret_cast<char*>(f.c.data()),
                static_cast<std::streamsize>(f.c.size() * sizeof(cplx)));
    };
    slurp(s.q_hat);
    slurp(s.u_hat.c1);
    slurp(s.u_hat.c2);
    if (!in) throw std::invalid_argument("load_checkpoint: truncated file: " + path);
    char extra;
    if (in.read(&extra, 1))
        throw std::invalid_argument("load_checkpoint: trailing bytes in " + path);
    return s;
}

}  // namespace ecsim

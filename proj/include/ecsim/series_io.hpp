#pragma once

#include <string>
#include <vector>

#include "ecsim/checks.hpp"
#include "ecsim/scenario.hpp"

namespace ecsim {

inline constexpr const char* kSeriesHeader =
    "t,l2q2,l2u2,l4q4,h1q2,h1u2,h2q2,h2u2,w14u,moment,mean_q,diffq2,diffu2,"
    "shell_low_q,shell_high_q,probe_zeta_max,probe_v_max";

// CSV with the exact header above, one row per record, 17 significant digits
// (values survive a write/read round trip bit-exactly).
void emit_series(const std::vector<TimeSeriesRecord>& records, const std::string& path);
std::vector<TimeSeriesRecord> read_series(const std::string& path);

// Column accessor by header name (any column except t). Unknown name throws.
double series_value(const TimeSeriesRecord& r, const std::string& column);

struct EnergyTrace {
    std::vector<double> t, energy, dissipation;
};

// Sidecar for the energy identity: E and D at the sample times.
void write_energy_trace(const EnergyTrace& trace, const std::string& path);
EnergyTrace read_energy_trace(const std::string& path);

struct PropertySuite {
    std::vector<CheckReport> identity;
    std::vector<CheckReport> inequality;
};

void write_property_suite(const PropertySuite& suite, const std::string& path);
PropertySuite read_property_suite(const std::string& path);

void write_order_check(const OrderCheck& oc, const std::string& path);
OrderCheck read_order_check(const std::string& path);

// Binary checkpoint: magic, version, n, half-period and time header, then the
// interleaved re/im coefficient payload of q, u1, u2 as little-endian doubles.
// Round trips bit-exactly.
void save_checkpoint(const SimState& s, const std::string& path);
SimState load_checkpoint(const std::string& path);

}  // namespace ecsim

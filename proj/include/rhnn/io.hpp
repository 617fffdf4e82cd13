#pragma once

#include "rhnn/complex.hpp"
#include "rhnn/dynamics.hpp"
#include "rhnn/synthesis.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rhnn::io {

// Raised for unreadable or structurally invalid input files.
class malformed_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using LoadedNetwork = std::variant<IntegerNetwork, Network, ComplexNetwork>;

// Network file:
//   { "n": 7, "kind": "real" | "complex", "bit_order": "msb_first",
//     "weights": [ row-major, n*n entries ], "thresholds": [ n entries ] }
// Complex entries are [re, im] pairs. Real files whose entries are all
// integers load as IntegerNetwork. thresholds may be omitted (zeros).
struct NetworkFile {
    LoadedNetwork network;
    BitOrder bit_order = BitOrder::msb_first;

    std::size_t order() const;
    bool is_complex() const { return std::holds_alternative<ComplexNetwork>(network); }
};

NetworkFile parse_network_file(std::string_view text);
NetworkFile load_network_file(const std::filesystem::path& path);
// One matrix row per line; integers carry no decimal point. Zero thresholds are omitted.
std::string serialize_network_file(const NetworkFile& file);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// "fnv1a64:<16 hex digits>" over the canonical serialization.
std::string network_checksum(const NetworkFile& file);

// Shortest round-trip text for a double; integral values print without a point.
std::string format_number(double x);
std::string format_number(std::int64_t x);

// Synthesis spec file:
//   { "n": 4,
//     "stable":     [ { "pattern": [1,1,1,1] | <decimal label>, "value": 4 | "3/2" | "2.5" } ],
//     "antistable": [ ... ] }
struct PatternSpecFile {
    std::size_t n = 0;
    std::vector<PatternSpec> stable;
    std::vector<PatternSpec> antistable;
    BitOrder bit_order = BitOrder::msb_first;
};

PatternSpecFile parse_pattern_spec_file(std::string_view text);
PatternSpecFile load_pattern_spec_file(const std::filesystem::path& path);

struct ScheduleInfo {
    UpdateSchedule schedule;
    std::string order_kind;  // "cyclic" | "random" | "" for non-serial modes
};

struct SweepResult {
    std::string network_path;
    std::string network_checksum;
    std::size_t n = 0;
    std::string kind;  // "integer" | "real" | "complex"
    BitOrder bit_order = BitOrder::msb_first;
    ScheduleInfo schedule;
    std::string initials;  // describe(InitialSource)
    std::uint64_t max_steps = 0;
    CycleInventory inventory;
    std::vector<std::optional<EnergyProfile>> profiles;  // parallel to inventory.cycles
    std::optional<HammingLocality> locality;
    bool include_members = false;
};

std::string serialize_sweep_result(const SweepResult& result);

// Minimal reader used to cross-check files: returns (labels, length, basin_size) per cycle.
struct SweepFileCycle {
    std::vector<Label> labels;
    std::size_t length = 0;
    std::size_t basin_size = 0;
};
struct SweepFileSummary {
    std::size_t n = 0;
    BitOrder bit_order = BitOrder::msb_first;
    std::vector<SweepFileCycle> cycles;
    std::vector<Label> unresolved;
};
SweepFileSummary parse_sweep_result(std::string_view text);

// Polarity experiment header plus one entry (trial, seed, cycle, network) per violation.
std::string serialize_counterexamples(const PolarityReport& report);

// Header "tick,state_decimal,energy", LF endings.
template <class S>
std::string trace_csv(const EnergyTrace<S>& trace);

struct TraceRow {
    std::uint64_t tick;
    Label label;
    std::string energy;
};
std::vector<TraceRow> parse_trace_csv(std::string_view text);

}  // namespace rhnn::io

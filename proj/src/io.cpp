#include "rhnn/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rhnn::io {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed_input("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw malformed_input(std::string(what) + ": " + e.what());
    }
}

std::size_t require_order(const json& doc) {
    if (!doc.is_object()) throw malformed_input("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() == 0)
        throw malformed_input("'n' must be a positive integer");
    return doc["n"].get<std::size_t>();
}

BitOrder read_bit_order(const json& doc) {
    if (!doc.contains("bit_order")) return BitOrder::msb_first;
    if (!doc["bit_order"].is_string()) throw malformed_input("'bit_order' must be a string");
    try {
        return parse_bit_order(doc["bit_order"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw malformed_input(e.what());
    }
}

const json& require_array(const json& doc, const char* key, std::size_t length) {
    if (!doc.contains(key) || !doc[key].is_array()) throw malformed_input(std::string("'") + key + "' must be an array");
    const json& a = doc[key];
    if (a.size() != length)
        throw malformed_input(std::string("'") + key + "' has " + std::to_string(a.size()) + " entries, expected " +
                              std::to_string(length));
    return a;
}

bool all_integers(const json& a) {
    for (const auto& x : a)
        if (!x.is_number_integer()) return false;
    return true;
}

double number_at(const json& x, const char* key) {
    if (!x.is_number()) throw malformed_input(std::string("non-numeric entry in '") + key + "'");
    const double v = x.get<double>();
    if (!std::isfinite(v)) throw malformed_input(std::string("non-finite entry in '") + key + "'");
    return v;
}

Complex complex_at(const json& x, const char* key) {
    if (!x.is_array() || x.size() != 2)
        throw malformed_input(std::string("complex entries in '") + key + "' must be [re, im] pairs");
    return {number_at(x[0], key), number_at(x[1], key)};
}

template <class S>
void append_rows(std::string& out, std::size_t n, std::span<const S> values) {
    for (std::size_t i = 0; i < n; ++i) {
        out += "    ";
        for (std::size_t j = 0; j < n; ++j) {
            out += format_number(values[i * n + j]);
            if (i + 1 < n || j + 1 < n) out += j + 1 < n ? ", " : ",";
        }
        out += "\n";
    }
}

std::string format_complex(Complex c) { return "[" + format_number(c.real()) + ", " + format_number(c.imag()) + "]"; }

}  // namespace

std::string format_number(std::int64_t x) { return std::to_string(x); }

std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (std::trunc(x) == x && std::abs(x) < 9.0e15) return std::to_string(static_cast<std::int64_t>(x));
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, ptr};
}

std::size_t NetworkFile::order() const {
    return std::visit([](const auto& net) { return net.order(); }, network);
}

NetworkFile parse_network_file(std::string_view text) {
    const json doc = parse_json(text, "network file");
    const std::size_t n = require_order(doc);
    NetworkFile file;
    file.bit_order = read_bit_order(doc);
    const std::string kind = doc.contains("kind") ? doc["kind"].get<std::string>() : "real";
    const json& w = require_array(doc, "weights", n * n);
    const bool has_t = doc.contains("thresholds");
    const json empty = json::array();
    const json& t = has_t ? require_array(doc, "thresholds", n) : empty;

    try {
        if (kind == "complex") {
            std::vector<Complex> weights, thresholds;
            for (const auto& x : w) weights.push_back(complex_at(x, "weights"));
            for (const auto& x : t) thresholds.push_back(complex_at(x, "thresholds"));
            file.network = ComplexNetwork(Matrix<Complex>(n, n, std::move(weights)), std::move(thresholds));
        } else if (kind == "real") {
            if (all_integers(w) && all_integers(t)) {
                std::vector<std::int64_t> weights, thresholds;
                for (const auto& x : w) weights.push_back(x.get<std::int64_t>());
                for (const auto& x : t) thresholds.push_back(x.get<std::int64_t>());
                file.network = IntegerNetwork(Matrix<std::int64_t>(n, n, std::move(weights)), std::move(thresholds));
            } else {
                std::vector<double> weights, thresholds;
                for (const auto& x : w) weights.push_back(number_at(x, "weights"));
                for (const auto& x : t) thresholds.push_back(number_at(x, "thresholds"));
                file.network = Network(Matrix<double>(n, n, std::move(weights)), std::move(thresholds));
            }
        } else {
            throw malformed_input("unknown network kind '" + kind + "'");
        }
    } catch (const json::exception& e) {
        throw malformed_input(std::string("network file: ") + e.what());
    }
    return file;
}

NetworkFile load_network_file(const std::filesystem::path& path) {
    try {
        return parse_network_file(read_text_file(path));
    } catch (const malformed_input& e) {
        throw malformed_input(path.string() + ": " + e.what());
    }
}

std::string serialize_network_file(const NetworkFile& file) {
    const std::size_t n = file.order();
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(n) + ",\n";
    out += std::string("  \"kind\": \"") + (file.is_complex() ? "complex" : "real") + "\",\n";
    out += "  \"bit_order\": \"" + to_string(file.bit_order) + "\",\n";
    out += "  \"weights\": [\n";
    std::visit(
        [&](const auto& net) {
            using N = std::decay_t<decltype(net)>;
            if constexpr (std::is_same_v<N, ComplexNetwork>) {
                for (std::size_t i = 0; i < n; ++i) {
                    out += "    ";
                    for (std::size_t j = 0; j < n; ++j) {
                        out += format_complex(net.weights()(i, j));
                        if (i + 1 < n || j + 1 < n) out += j + 1 < n ? ", " : ",";
                    }
                    out += "\n";
                }
                out += "  ]";
                bool zero = true;
                for (const auto& c : net.thresholds()) zero = zero && c == Complex{};
                if (!zero) {
                    out += ",\n  \"thresholds\": [";
                    for (std::size_t i = 0; i < n; ++i) out += (i ? ", " : "") + format_complex(net.thresholds()[i]);
                    out += "]";
                }
            } else {
                append_rows(out, n, net.weights().data());
                out += "  ]";
                if (!net.zero_thresholds()) {
                    out += ",\n  \"thresholds\": [";
                    for (std::size_t i = 0; i < n; ++i) out += (i ? ", " : "") + format_number(net.thresholds()[i]);
                    out += "]";
                }
            }
        },
        file.network);
    out += "\n}\n";
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

std::string network_checksum(const NetworkFile& file) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_network_file(file)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

BipolarState read_pattern(const json& x, std::size_t n, BitOrder order) {
    if (x.is_number_unsigned()) {
        try {
            return encode_state(x.get<Label>(), n, order);
        } catch (const std::out_of_range& e) {
            throw malformed_input(e.what());
        }
    }
    if (!x.is_array()) throw malformed_input("pattern must be a label or an array of +1/-1");
    std::vector<std::int8_t> v;
    for (const auto& c : x) {
        if (!c.is_number_integer() || (c.get<int>() != 1 && c.get<int>() != -1))
            throw malformed_input("pattern components must be +1 or -1");
        v.push_back(static_cast<std::int8_t>(c.get<int>()));
    }
    if (v.size() != n)
        throw malformed_input("pattern has " + std::to_string(v.size()) + " components, expected " + std::to_string(n));
    return BipolarState(std::move(v));
}

Rational read_value(const json& x) {
    try {
        if (x.is_number_integer()) return Rational(x.get<std::int64_t>());
        if (x.is_string()) return Rational::parse(x.get<std::string>());
        if (x.is_number_float()) {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x.get<double>(), std::chars_format::fixed);
            if (ec != std::errc{}) throw malformed_input("value out of range");
            return Rational::parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
        }
    } catch (const std::invalid_argument& e) {
        throw malformed_input(e.what());
    } catch (const std::overflow_error& e) {
        throw malformed_input(std::string("value: ") + e.what());
    }
    throw malformed_input("value must be a number or a \"p/q\" string");
}

}  // namespace

PatternSpecFile parse_pattern_spec_file(std::string_view text) {
    const json doc = parse_json(text, "pattern spec file");
    PatternSpecFile file;
    file.n = require_order(doc);
    file.bit_order = read_bit_order(doc);
    for (const char* key : {"stable", "antistable"}) {
        if (!doc.contains(key)) continue;
        if (!doc[key].is_array()) throw malformed_input(std::string("'") + key + "' must be an array");
        auto& list = std::string_view(key) == "stable" ? file.stable : file.antistable;
        for (const auto& entry : doc[key]) {
            if (!entry.is_object() || !entry.contains("pattern") || !entry.contains("value"))
                throw malformed_input(std::string("entries of '") + key + "' need 'pattern' and 'value'");
            list.push_back({read_pattern(entry["pattern"], file.n, file.bit_order), read_value(entry["value"])});
        }
    }
    return file;
}

PatternSpecFile load_pattern_spec_file(const std::filesystem::path& path) {
    try {
        return parse_pattern_spec_file(read_text_file(path));
    } catch (const malformed_input& e) {
        throw malformed_input(path.string() + ": " + e.what());
    }
}

std::string serialize_sweep_result(const SweepResult& r) {
    ordered_json doc;
    doc["network"] = {{"path", r.network_path}, {"checksum", r.network_checksum}, {"n", r.n}, {"kind", r.kind}};
    doc["bit_order"] = to_string(r.bit_order);
    ordered_json sched;
    sched["mode"] = to_string(r.schedule.schedule.mode());
    if (r.schedule.schedule.mode() == UpdateMode::serial) {
        sched["order"] = r.schedule.order_kind;
        std::vector<std::size_t> order;
        for (auto i : r.schedule.schedule.serial_order()) order.push_back(i + 1);
        sched["sequence"] = order;
        if (auto seed = r.schedule.schedule.seed()) sched["seed"] = *seed;
    }
    if (r.schedule.schedule.mode() == UpdateMode::layered) sched["layers"] = r.schedule.schedule.partition().str();
    doc["schedule"] = sched;
    doc["initials"] = r.initials;
    doc["max_steps"] = r.max_steps;
    doc["resolved"] = r.inventory.resolved_count();

    ordered_json cycles = ordered_json::array();
    for (std::size_t k = 0; k < r.inventory.cycles.size(); ++k) {
        const auto& c = r.inventory.cycles[k];
        ordered_json entry;
        entry["labels"] = c.states;
        entry["name"] = c.str();
        entry["length"] = c.length();
        entry["basin_size"] = r.inventory.basins[k].size();
        if (r.include_members) entry["basin"] = r.inventory.basins[k];
        if (k < r.profiles.size() && r.profiles[k]) {
            const auto& p = *r.profiles[k];
            if (p.kind == EnergyProfile::Kind::constant)
                entry["energy_profile"] = {{"kind", "constant"}, {"value", p.mean}};
            else
                entry["energy_profile"] = {{"kind", "oscillating"}, {"period", p.period}, {"mean", p.mean}};
        } else {
            entry["energy_profile"] = nullptr;
        }
        cycles.push_back(std::move(entry));
    }
    doc["cycles"] = std::move(cycles);
    doc["unresolved"] = r.inventory.unresolved;
    if (r.locality)
        doc["hamming_locality"] = {{"pairs", r.locality->pairs},
                                   {"shared", r.locality->shared},
                                   {"fraction", r.locality->fraction()}};
    return doc.dump(2) + "\n";
}

SweepFileSummary parse_sweep_result(std::string_view text) {
    const json doc = parse_json(text, "sweep result");
    SweepFileSummary s;
    try {
        s.n = doc.at("network").at("n").get<std::size_t>();
        s.bit_order = parse_bit_order(doc.at("bit_order").get<std::string>());
        for (const auto& c : doc.at("cycles"))
            s.cycles.push_back({c.at("labels").get<std::vector<Label>>(), c.at("length").get<std::size_t>(),
                                c.at("basin_size").get<std::size_t>()});
        s.unresolved = doc.at("unresolved").get<std::vector<Label>>();
    } catch (const json::exception& e) {
        throw malformed_input(std::string("sweep result: ") + e.what());
    }
    return s;
}

template <class S>
std::string trace_csv(const EnergyTrace<S>& trace) {
    std::string out = "tick,state_decimal,energy\n";
    for (const auto& s : trace.samples)
        out += std::to_string(s.tick) + "," + std::to_string(s.label) + "," + format_number(s.energy) + "\n";
    return out;
}

template std::string trace_csv(const EnergyTrace<std::int64_t>&);
template std::string trace_csv(const EnergyTrace<double>&);

std::vector<TraceRow> parse_trace_csv(std::string_view text) {
    std::vector<TraceRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "tick,state_decimal,energy") throw malformed_input("bad trace header");
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw malformed_input("bad trace row '" + line + "'");
        rows.push_back({std::stoull(line.substr(0, c1)), std::stoull(line.substr(c1 + 1, c2 - c1 - 1)),
                        line.substr(c2 + 1)});
    }
    return rows;
}

std::string serialize_counterexamples(const PolarityReport& r) {
    ordered_json doc;
    doc["polarity"] = to_string(r.polarity);
    doc["n"] = r.n;
    doc["trials"] = r.trials;
    doc["networks_max_len_le2"] = r.networks_max_len_le2;
    doc["counterexamples"] = ordered_json::array();
    for (const auto& v : r.violations) {
        const NetworkFile f{v.network, BitOrder::msb_first};
        doc["counterexamples"].push_back({{"trial", v.trial},
                                         {"seed", v.seed},
                                         {"cycle", v.longest.states},
                                         {"network", ordered_json::parse(serialize_network_file(f))}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace rhnn::io

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Optional argv[1]: path prefix for the polarity counterexample files.

#include "rhnn/complex.hpp"
#include "rhnn/dynamics.hpp"
#include "rhnn/io.hpp"
#include "rhnn/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace rhnn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
    std::printf("%s  %2d  %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void info(const std::string& text) { std::printf("          %s\n", text.c_str()); }

IntegerNetwork toy_network() {
    const auto file = io::load_network_file(std::filesystem::path(RHNN_DATA_DIR) / "toy7.json");
    return std::get<IntegerNetwork>(file.network);
}

std::string inventory_str(const CycleInventory& inv) {
    std::string s;
    for (std::size_t k = 0; k < inv.cycles.size(); ++k)
        s += (k ? " " : "") + std::string("{") + inv.cycles[k].str() + "}";
    return s;
}

Matrix<std::int64_t> random_matrix(std::size_t n, std::int64_t magnitude, std::mt19937_64& rng, bool symmetric) {
    std::uniform_int_distribution<std::int64_t> d(-magnitude, magnitude);
    Matrix<std::int64_t> w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = d(rng);
    if (symmetric) {
        for (std::size_t i = 0; i < n; ++i) {
            w(i, i) = std::abs(w(i, i));
            for (std::size_t j = 0; j < i; ++j) w(i, j) = w(j, i);
        }
    }
    return w;
}

std::vector<BipolarState> hadamard_rows(std::size_t n) {
    std::vector<BipolarState> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int8_t> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = (__builtin_popcountll(i & j) % 2) ? -1 : 1;
        rows.emplace_back(std::move(r));
    }
    return rows;
}

const std::set<std::string> expected_toy_cycles{"35", "5-42", "58-69", "21-106", "22-119-92-94", "85-122"};

void criterion_1_and_2(const IntegerNetwork& toy) {
    std::optional<BitOrder> matched;
    CycleInventory matched_inv;
    double elapsed = 0;
    for (BitOrder order : {BitOrder::msb_first, BitOrder::lsb_first}) {
        SweepConfig config;
        config.bit_order = order;
        const auto t0 = Clock::now();
        const auto inv = sweep(toy, config);
        const double dt = seconds_since(t0);
        std::set<std::string> got;
        for (const auto& c : inv.cycles) got.insert(c.str());
        info(to_string(order) + ": " + std::to_string(inv.cycles.size()) + " cycles " + inventory_str(inv));
        if (!matched && got == expected_toy_cycles && inv.resolved_count() == 128) {
            matched = order;
            matched_inv = inv;
            elapsed = dt;
        }
    }
    std::ostringstream d;
    if (matched)
        d << "6 cycles match under " << to_string(*matched) << ", sweep " << elapsed * 1e3 << " ms";
    else
        d << "no bit order reproduces the 6 reference cycles";
    report(1, matched && elapsed < 1.0, "toy parallel sweep", d.str());

    bool lengths_ok = matched.has_value();
    std::ostringstream l;
    for (const auto& [len, count] : matched_inv.length_histogram()) {
        l << "length " << len << " x" << count << "  ";
        lengths_ok = lengths_ok && (len == 1 || len == 2 || len == 4);
    }
    report(2, lengths_ok, "toy parallel cycle lengths in {1,2,4}", l.str());
}

void criterion_3(const IntegerNetwork& toy) {
    SweepConfig config;
    config.schedule = UpdateSchedule::serial_cyclic(7);
    const auto inv = sweep(toy, config);
    const bool ok = inv.unresolved.empty() && inv.max_cycle_length() <= 2;
    report(3, ok, "toy serial sweep (cyclic order 1..7) has only fixed points and 2-cycles",
           inventory_str(inv) + ", max length " + std::to_string(inv.max_cycle_length()));

    config.schedule = UpdateSchedule::serial_order({6, 5, 4, 3, 2, 1, 0});
    const auto rev = sweep(toy, config);
    info("reverse order 7..1 (informational): " + inventory_str(rev) + ", max length " +
         std::to_string(rev.max_cycle_length()));
}

void criterion_4() {
    std::mt19937_64 rng(20240401);
    std::size_t serial_violations = 0, parallel_violations = 0, unresolved = 0;
    const auto t0 = Clock::now();
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const IntegerNetwork net(random_matrix(n, 20, rng, true));
        SweepConfig config;
        const auto par = sweep(net, config);
        if (par.max_cycle_length() > 2) ++parallel_violations;
        config.schedule = UpdateSchedule::serial_cyclic(n);
        const auto ser = sweep(net, config);
        if (ser.max_cycle_length() != 1) ++serial_violations;
        unresolved += par.unresolved.size() + ser.unresolved.size();
    }
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "200 symmetric matrices n=2..10, serial non-fixed-point " << serial_violations << ", parallel length>2 "
      << parallel_violations << ", unresolved " << unresolved << ", " << dt << " s";
    report(4, serial_violations + parallel_violations + unresolved == 0 && dt < 60.0,
           "symmetric convergence (serial fixed points, parallel length <= 2)", d.str());
}

void criterion_5() {
    std::mt19937_64 rng(20240402);
    std::size_t checked = 0, violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const auto w = random_matrix(n, 50, rng, false);
        const auto s = symmetric_part(w);
        for (Label l = 0; l < state_space_size(n); ++l) {
            const auto v = encode_state(l, n);
            ++checked;
            if (Rational(quadratic_form(w, v)) != quadratic_form(s, v)) ++violations;
        }
    }
    report(5, violations == 0, "energy identity with the symmetric part",
           std::to_string(checked) + " corners over 100 matrices, " + std::to_string(violations) + " violations");
}

void criterion_6() {
    std::mt19937_64 rng(20240403);
    std::size_t violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = trial % 2 ? 8 : 4;
        auto rows = hadamard_rows(n);
        std::shuffle(rows.begin(), rows.end(), rng);
        for (auto& r : rows)
            if (rng() % 2) r = r.negated();
        const std::size_t s = 1 + rng() % (n - 1);
        const std::size_t l = 1 + rng() % (n - s);
        std::vector<PatternSpec> stable, anti;
        for (std::size_t k = 0; k < s; ++k) stable.push_back({rows[k], Rational(1 + rng() % 20, 1 + rng() % 4)});
        for (std::size_t k = s; k < s + l; ++k) anti.push_back({rows[k], Rational(1 + rng() % 20, 1 + rng() % 4)});

        const auto w = synthesize_mixed(stable, anti, n);
        const BasicNetwork<Rational> net(w);
        auto residual_zero = [&](const BipolarState& x, const Rational& lambda) {
            for (std::size_t i = 0; i < n; ++i) {
                Rational acc;
                for (std::size_t j = 0; j < n; ++j) acc += w(i, j) * Rational(x[j]);
                if (acc != lambda * Rational(x[i])) return false;
            }
            return true;
        };
        bool ok = true;
        for (const auto& sp : stable) ok = ok && residual_zero(sp.pattern, sp.value) && is_stable(net, sp.pattern);
        for (const auto& sp : anti) ok = ok && residual_zero(sp.pattern, -sp.value) && is_antistable(w, sp.pattern);
        if (!ok) ++violations;
    }
    report(6, violations == 0, "synthesis eigen-postconditions (exact)",
           "100 orthogonal families n in {4,8}, " + std::to_string(violations) + " violations");
}

void criterion_7() {
    std::mt19937_64 rng(20240404);
    std::size_t violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const auto w = random_matrix(n, 30, rng, false);
        const Label m = state_space_size(n);
        std::vector<std::int64_t> base(m);
        for (Label l = 0; l < m; ++l) base[l] = quadratic_form(w, encode_state(l, n));
        for (int k = 0; k < 5; ++k) {
            const std::int64_t c = static_cast<std::int64_t>(rng() % 201) - 100;
            const auto shifted = shift_diagonal(w, c);
            std::vector<std::int64_t> e(m);
            for (Label l = 0; l < m; ++l) e[l] = quadratic_form(shifted, encode_state(l, n));
            bool ok = true;
            for (Label a = 0; a < m && ok; ++a)
                for (Label b = 0; b < m && ok; ++b) ok = (base[a] < base[b]) == (e[a] < e[b]);
            auto extremes = [&](const std::vector<std::int64_t>& v) {
                const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
                std::pair<std::vector<Label>, std::vector<Label>> r;
                for (Label l = 0; l < m; ++l) {
                    if (v[l] == *lo) r.first.push_back(l);
                    if (v[l] == *hi) r.second.push_back(l);
                }
                return r;
            };
            if (!ok || extremes(base) != extremes(e)) ++violations;
        }
    }
    report(7, violations == 0, "diagonal-shift invariance of the corner ordering",
           "50 matrices x 5 shifts, " + std::to_string(violations) + " violations");
}

void criterion_8(const IntegerNetwork& toy) {
    const std::map<std::string, std::pair<EnergyProfile::Kind, std::size_t>> expected{
        {"58-69", {EnergyProfile::Kind::constant, 0}},
        {"21-106", {EnergyProfile::Kind::constant, 0}},
        {"5-42", {EnergyProfile::Kind::oscillating, 2}},
        {"85-122", {EnergyProfile::Kind::oscillating, 2}},
        {"22-119-92-94", {EnergyProfile::Kind::oscillating, 4}},
    };
    const auto inv = sweep(toy, SweepConfig{});
    std::size_t matched = 0;
    std::ostringstream d;
    for (const auto& c : inv.cycles) {
        const auto p = cycle_energy_profile(toy, c, UpdateSchedule::parallel());
        d << "{" << c.str() << "} " << p.str() << "  ";
        auto it = expected.find(c.str());
        if (it == expected.end()) continue;
        const auto [kind, period] = it->second;
        if (p.kind == kind && (kind == EnergyProfile::Kind::constant || p.period == period)) ++matched;
    }
    report(8, matched == expected.size(), "toy energy-profile classification", d.str());
}

void criterion_9(const std::string& counterexample_path) {
    bool wrote_ok = true;
    std::ostringstream d;
    std::size_t violations = 0;
    for (Polarity pol : {Polarity::non_negative, Polarity::non_positive}) {
        const auto r = polarity_experiment(8, pol, 100, UpdateSchedule::parallel(), 20240409);
        violations += r.violations.size();
        d << to_string(pol) << " " << r.networks_max_len_le2 << "/" << r.trials << " with max length <= 2";
        if (r.networks_with_unresolved) d << " (" << r.networks_with_unresolved << " with unresolved)";
        d << "  ";
        if (!counterexample_path.empty()) {
            const std::string path = counterexample_path + "." + to_string(pol) + ".json";
            try {
                io::write_text_file(path, io::serialize_counterexamples(r));
            } catch (const std::exception&) {
                wrote_ok = false;
            }
        }
    }
    d << "violations " << violations;
    if (violations && !counterexample_path.empty()) d << " (counterexamples in " << counterexample_path << ".*.json)";
    // An observation rather than a theorem: violations are reported, not failed.
    report(9, wrote_ok, "sign-definite networks (n=8) mostly have cycles of length <= 2", d.str());
}

void criterion_10() {
    std::mt19937_64 rng(20240410);
    std::uniform_int_distribution<int> d(-9, 9);
    std::size_t states = 0, violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 3;
        std::vector<Complex> w(n * n);
        for (auto& x : w) x = Complex(d(rng), d(rng));
        const ComplexNetwork net(Matrix<Complex>(n, n, std::move(w)));
        const Network real = realify(net);
        for (Label l = 0; l < state_space_size(2 * n); ++l) {
            const auto start = decode_complex_state(l, n);
            const auto ct = iterate_until_cycle(net, start, UpdateSchedule::parallel());
            const auto rt = iterate_until_cycle(real, stack(start), UpdateSchedule::parallel());
            bool ok = ct.cycle.has_value() && rt.cycle.has_value() && ct.states.size() == rt.states.size() &&
                      ct.tail_length == rt.tail_length;
            for (std::size_t k = 0; ok && k < ct.states.size(); ++k) ok = unstack(rt.states[k]) == ct.states[k];
            ++states;
            if (!ok) ++violations;
        }
    }
    report(10, violations == 0, "complex dynamics match the real block embedding",
           std::to_string(states) + " initial states over 50 networks, " + std::to_string(violations) +
               " violations");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string counterexamples = argc > 1 ? argv[1] : "";
    const IntegerNetwork toy = toy_network();
    criterion_1_and_2(toy);
    criterion_3(toy);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(toy);
    criterion_9(counterexamples);
    criterion_10();
    std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}

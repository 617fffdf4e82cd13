#include "rhnn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rhnn {

std::string Cycle::str() const {
    std::string s;
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (k) s += "-";
        s += std::to_string(states[k]);
    }
    return s;
}

Cycle canonicalize_cycle(std::vector<Label> labels) {
    if (labels.empty()) throw std::invalid_argument("canonicalize_cycle: empty cycle");
    std::vector<Label> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("canonicalize_cycle: duplicate labels");
    std::rotate(labels.begin(), std::min_element(labels.begin(), labels.end()), labels.end());
    return Cycle{std::move(labels)};
}

namespace {

// Shared cycle-detection loop. Only round-boundary states are keyed; with
// Record set, every tick's state is kept as well.
template <bool Record, class State, class TickFn, class LabelFn>
BasicTrajectory<State> run_until_cycle(State x, TickFn&& tick, LabelFn&& label, std::size_t ticks_per_round,
                                       std::uint64_t max_steps) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
    BasicTrajectory<State> traj;
    traj.ticks_per_round = ticks_per_round;
    std::unordered_map<Label, std::size_t> seen;  // boundary label -> boundary index
    std::vector<Label> boundaries;
    for (std::uint64_t t = 0;; ++t) {
        const Label l = label(x);
        if (t % ticks_per_round == 0) {
            if (auto it = seen.find(l); it != seen.end()) {
                traj.tail_length = it->second * ticks_per_round;
                traj.cycle = canonicalize_cycle({boundaries.begin() + static_cast<std::ptrdiff_t>(it->second),
                                                 boundaries.end()});
                return traj;
            }
            seen.emplace(l, boundaries.size());
            boundaries.push_back(l);
        }
        if constexpr (Record) {
            traj.labels.push_back(l);
            traj.states.push_back(x);
        }
        if (t == max_steps) return traj;
        x = tick(x, t);
    }
}

template <class S>
auto real_tick(const BasicNetwork<S>& net, const UpdateSchedule& schedule) {
    return [&net, &schedule](const BipolarState& v, std::uint64_t t) { return apply_tick(net, v, schedule, t); };
}

auto real_label(BitOrder order) {
    return [order](const BipolarState& v) { return decode_state(v, order); };
}

auto complex_tick(const ComplexNetwork& net, const UpdateSchedule& schedule) {
    if (schedule.mode() == UpdateMode::layered)
        throw std::invalid_argument("complex networks support serial and parallel schedules only");
    return [&net, &schedule](const ComplexBipolarState& v, std::uint64_t t) {
        if (schedule.mode() == UpdateMode::parallel) return cstep_parallel(net, v);
        return cstep_serial(net, v, schedule.serial_order()[t % schedule.serial_order().size()]);
    };
}

template <class S>
void check_real(const BasicNetwork<S>& net, const BipolarState& v, const UpdateSchedule& schedule) {
    if (v.size() != net.order())
        throw dimension_error("initial state has length " + std::to_string(v.size()) + ", network order is " +
                              std::to_string(net.order()));
    state_space_size(net.order());
    schedule.check_order(net.order());
}

CycleInventory aggregate(const std::vector<Label>& initials, std::vector<std::optional<Cycle>>& results) {
    std::map<Cycle, std::vector<Label>> basins;
    CycleInventory inv;
    for (std::size_t k = 0; k < initials.size(); ++k) {
        if (results[k]) basins[std::move(*results[k])].push_back(initials[k]);
        else inv.unresolved.push_back(initials[k]);
    }
    for (auto& [cycle, members] : basins) {
        std::sort(members.begin(), members.end());
        inv.cycles.push_back(cycle);
        inv.basins.push_back(std::move(members));
    }
    std::sort(inv.unresolved.begin(), inv.unresolved.end());
    return inv;
}

template <class DecodeFn, class CycleFn>
CycleInventory sweep_impl(const std::vector<Label>& initials, DecodeFn&& decode, CycleFn&& find, bool parallel) {
    std::vector<std::optional<Cycle>> results(initials.size());
    const auto count = static_cast<std::int64_t>(initials.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t k = 0; k < count; ++k) results[k] = find(decode(initials[k]));
    } else {
        for (std::int64_t k = 0; k < count; ++k) results[k] = find(decode(initials[k]));
    }
    return aggregate(initials, results);
}

template <class S>
CycleInventory real_sweep(const BasicNetwork<S>& net, const SweepConfig& config, bool parallel) {
    const std::size_t n = net.order();
    state_space_size(n);
    config.schedule.check_order(n);
    const auto initials = resolve_initials(config.initials, n);
    auto decode = [&](Label l) { return encode_state(l, n, config.bit_order); };
    auto find = [&](const BipolarState& v) {
        return run_until_cycle<false>(v, real_tick(net, config.schedule), real_label(config.bit_order),
                                      config.schedule.ticks_per_round(), config.max_steps)
            .cycle;
    };
    return sweep_impl(initials, decode, find, parallel);
}

CycleInventory complex_sweep(const ComplexNetwork& net, const SweepConfig& config, bool parallel) {
    const std::size_t n = net.order();
    config.schedule.check_order(n);
    const auto initials = resolve_initials(config.initials, 2 * n);
    auto tick = complex_tick(net, config.schedule);
    auto decode = [&](Label l) { return decode_complex_state(l, n); };
    auto find = [&](const ComplexBipolarState& v) {
        return run_until_cycle<false>(v, tick, encode_label, config.schedule.ticks_per_round(), config.max_steps)
            .cycle;
    };
    return sweep_impl(initials, decode, find, parallel);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

template <class S>
Trajectory iterate_until_cycle(const BasicNetwork<S>& net, const BipolarState& initial,
                               const UpdateSchedule& schedule, std::uint64_t max_steps, BitOrder order) {
    check_real(net, initial, schedule);
    return run_until_cycle<true>(initial, real_tick(net, schedule), real_label(order), schedule.ticks_per_round(),
                                 max_steps);
}

template <class S>
Trajectory simulate(const BasicNetwork<S>& net, const BipolarState& initial, const UpdateSchedule& schedule,
                    std::uint64_t ticks, BitOrder order) {
    check_real(net, initial, schedule);
    Trajectory traj;
    traj.ticks_per_round = schedule.ticks_per_round();
    BipolarState x = initial;
    for (std::uint64_t t = 0; t < ticks; ++t) {
        traj.labels.push_back(decode_state(x, order));
        traj.states.push_back(x);
        x = apply_tick(net, x, schedule, t);
    }
    return traj;
}

ComplexTrajectory iterate_until_cycle(const ComplexNetwork& net, const ComplexBipolarState& initial,
                                      const UpdateSchedule& schedule, std::uint64_t max_steps) {
    if (initial.size() != net.order()) throw dimension_error("initial complex state length mismatch");
    schedule.check_order(net.order());
    return run_until_cycle<true>(initial, complex_tick(net, schedule), encode_label, schedule.ticks_per_round(),
                                 max_steps);
}

InitialSource default_initials(std::size_t width) {
    if (state_space_size(width) <= default_initial_cap) return Exhaustive{};
    return LabelRange{0, default_initial_cap};
}

std::vector<Label> resolve_initials(const InitialSource& source, std::size_t width) {
    const Label space = state_space_size(width);
    std::vector<Label> out;
    if (std::holds_alternative<Exhaustive>(source)) {
        out.resize(space);
        std::iota(out.begin(), out.end(), Label{0});
    } else if (const auto* r = std::get_if<LabelRange>(&source)) {
        if (r->lo > r->hi || r->hi > space)
            throw std::out_of_range("initial range [" + std::to_string(r->lo) + ", " + std::to_string(r->hi) +
                                    ") not within [0, " + std::to_string(space) + ")");
        out.resize(r->hi - r->lo);
        std::iota(out.begin(), out.end(), r->lo);
    } else if (const auto* e = std::get_if<ExplicitLabels>(&source)) {
        for (Label l : e->labels)
            if (l >= space) throw std::out_of_range("initial label " + std::to_string(l) + " out of range");
        out = e->labels;
    } else {
        const auto& s = std::get<RandomSample>(source);
        if (s.count < 1) throw std::invalid_argument("sample count must be at least 1");
        if (s.count > space) throw std::invalid_argument("sample count exceeds state space");
        std::mt19937_64 rng(s.seed);
        std::unordered_set<Label> taken;
        while (out.size() < s.count) {
            const Label l = rng() % space;
            if (taken.insert(l).second) out.push_back(l);
        }
    }
    return out;
}

std::string describe(const InitialSource& source) {
    if (std::holds_alternative<Exhaustive>(source)) return "exhaustive";
    if (const auto* r = std::get_if<LabelRange>(&source))
        return "range[" + std::to_string(r->lo) + "," + std::to_string(r->hi) + ")";
    if (const auto* e = std::get_if<ExplicitLabels>(&source))
        return "list(" + std::to_string(e->labels.size()) + ")";
    const auto& s = std::get<RandomSample>(source);
    return "sample(count=" + std::to_string(s.count) + ",seed=" + std::to_string(s.seed) + ")";
}

std::size_t CycleInventory::resolved_count() const {
    std::size_t c = 0;
    for (const auto& b : basins) c += b.size();
    return c;
}

std::size_t CycleInventory::max_cycle_length() const {
    std::size_t m = 0;
    for (const auto& c : cycles) m = std::max(m, c.length());
    return m;
}

std::map<std::size_t, std::size_t> CycleInventory::length_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (const auto& c : cycles) ++h[c.length()];
    return h;
}

std::optional<std::size_t> CycleInventory::cycle_index_of(Label initial) const {
    for (std::size_t k = 0; k < basins.size(); ++k)
        if (std::binary_search(basins[k].begin(), basins[k].end(), initial)) return k;
    return std::nullopt;
}

template <class S>
CycleInventory sweep(const BasicNetwork<S>& net, const SweepConfig& config) {
    return real_sweep(net, config, true);
}

template <class S>
CycleInventory sweep_reference(const BasicNetwork<S>& net, const SweepConfig& config) {
    return real_sweep(net, config, false);
}

CycleInventory sweep(const ComplexNetwork& net, const SweepConfig& config) {
    return complex_sweep(net, config, true);
}

CycleInventory sweep_reference(const ComplexNetwork& net, const SweepConfig& config) {
    return complex_sweep(net, config, false);
}

template <class S>
EnergyTrace<S> energy_trace(const BasicNetwork<S>& net, const Trajectory& traj) {
    if (traj.states.empty()) throw std::invalid_argument("energy_trace: empty trajectory");
    EnergyTrace<S> trace;
    trace.samples.reserve(traj.states.size());
    for (std::size_t t = 0; t < traj.states.size(); ++t)
        trace.samples.push_back({t, traj.labels[t], quadratic_energy(net, traj.states[t])});
    return trace;
}

std::string EnergyProfile::str() const {
    if (kind == Kind::constant) return "constant";
    return "oscillating(period=" + std::to_string(period) + ")";
}

template <class S>
EnergyProfile classify_energy_profile(const EnergyTrace<S>& trace, std::size_t period_ticks, double tolerance) {
    if (period_ticks == 0) throw std::invalid_argument("period must be positive");
    const auto& s = trace.samples;
    if (s.size() < 2 * period_ticks)
        throw std::invalid_argument("trace has " + std::to_string(s.size()) + " samples, need at least " +
                                    std::to_string(2 * period_ticks));
    auto close = [tolerance](const S& a, const S& b) {
        return std::abs(static_cast<double>(a) - static_cast<double>(b)) <= tolerance;
    };
    const std::size_t first = s.size() - 2 * period_ticks;
    const std::size_t second = s.size() - period_ticks;
    for (std::size_t k = 0; k < period_ticks; ++k)
        if (!close(s[first + k].energy, s[second + k].energy))
            throw std::invalid_argument("trace is not periodic with period " + std::to_string(period_ticks));

    EnergyProfile p;
    p.period = period_ticks;
    bool constant = true;
    double sum = 0;
    for (std::size_t k = second; k < s.size(); ++k) {
        constant = constant && close(s[k].energy, s[second].energy);
        sum += static_cast<double>(s[k].energy);
    }
    p.kind = constant ? EnergyProfile::Kind::constant : EnergyProfile::Kind::oscillating;
    p.mean = sum / static_cast<double>(period_ticks);
    return p;
}

template <class S>
EnergyProfile cycle_energy_profile(const BasicNetwork<S>& net, const Cycle& cycle, const UpdateSchedule& schedule,
                                   BitOrder order) {
    const std::size_t period = cycle.length() * schedule.ticks_per_round();
    const auto traj = simulate(net, encode_state(cycle.states.front(), net.order(), order), schedule, 2 * period, order);
    return classify_energy_profile(energy_trace(net, traj), period);
}

HammingLocality hamming_locality(const CycleInventory& inventory, std::size_t width) {
    state_space_size(width);
    std::unordered_map<Label, std::size_t> terminal;
    for (std::size_t k = 0; k < inventory.basins.size(); ++k)
        for (Label l : inventory.basins[k]) terminal.emplace(l, k);
    HammingLocality h;
    for (const auto& [label, cycle] : terminal) {
        for (std::size_t b = 0; b < width; ++b) {
            const Label neighbour = label ^ (Label{1} << b);
            if (neighbour < label) continue;
            auto it = terminal.find(neighbour);
            if (it == terminal.end()) continue;
            ++h.pairs;
            h.shared += it->second == cycle;
        }
    }
    return h;
}

std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::mixed: return "mixed";
        case Polarity::non_negative: return "nonneg";
        case Polarity::non_positive: return "nonpos";
    }
    return "?";
}

Polarity parse_polarity(const std::string& text) {
    if (text == "mixed") return Polarity::mixed;
    if (text == "nonneg" || text == "non-negative") return Polarity::non_negative;
    if (text == "nonpos" || text == "non-positive") return Polarity::non_positive;
    throw std::invalid_argument("unknown polarity '" + text + "' (expected mixed, nonneg, nonpos)");
}

IntegerNetwork random_network(std::size_t n, Polarity polarity, std::int64_t magnitude, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("network order must be at least 1");
    if (magnitude < 1) throw std::invalid_argument("magnitude must be at least 1");
    const std::int64_t lo = polarity == Polarity::non_negative ? 0 : -magnitude;
    const std::int64_t hi = polarity == Polarity::non_positive ? 0 : magnitude;
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    std::mt19937_64 rng(seed);
    Matrix<std::int64_t> w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) w(i, j) = lo + static_cast<std::int64_t>(rng() % span);
    return IntegerNetwork(std::move(w));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(seed ^ splitmix64(trial)); }

PolarityReport polarity_experiment(std::size_t n, Polarity polarity, std::size_t trials,
                                   const UpdateSchedule& schedule, std::uint64_t seed, std::int64_t magnitude,
                                   std::uint64_t max_steps) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    PolarityReport report;
    report.n = n;
    report.polarity = polarity;
    report.trials = trials;
    SweepConfig config{default_initials(n), schedule, max_steps, BitOrder::msb_first};
    for (std::size_t k = 0; k < trials; ++k) {
        const std::uint64_t s = trial_seed(seed, k);
        IntegerNetwork net = random_network(n, polarity, magnitude, s);
        const CycleInventory inv = sweep(net, config);
        for (const auto& c : inv.cycles) ++report.cycle_length_histogram[c.length()];
        const std::size_t longest = inv.max_cycle_length();
        report.networks_max_len_le2 += longest <= 2;
        report.networks_with_long_cycles += longest >= 2;
        report.networks_with_unresolved += !inv.unresolved.empty();
        if (polarity != Polarity::mixed && longest > 2) {
            const auto it = std::max_element(inv.cycles.begin(), inv.cycles.end(),
                                             [](const Cycle& a, const Cycle& b) { return a.length() < b.length(); });
            report.violations.push_back({k, s, std::move(net), *it});
        }
    }
    return report;
}

#define RHNN_INSTANTIATE(S)                                                                                       \
    template Trajectory iterate_until_cycle(const BasicNetwork<S>&, const BipolarState&, const UpdateSchedule&,  \
                                            std::uint64_t, BitOrder);                                            \
    template Trajectory simulate(const BasicNetwork<S>&, const BipolarState&, const UpdateSchedule&,             \
                                 std::uint64_t, BitOrder);                                                       \
    template CycleInventory sweep(const BasicNetwork<S>&, const SweepConfig&);                                  \
    template CycleInventory sweep_reference(const BasicNetwork<S>&, const SweepConfig&);                        \
    template EnergyTrace<S> energy_trace(const BasicNetwork<S>&, const Trajectory&);                             \
    template EnergyProfile classify_energy_profile(const EnergyTrace<S>&, std::size_t, double);                  \
    template EnergyProfile cycle_energy_profile(const BasicNetwork<S>&, const Cycle&, const UpdateSchedule&,     \
                                                BitOrder);

RHNN_INSTANTIATE(std::int64_t)
RHNN_INSTANTIATE(double)

#undef RHNN_INSTANTIATE

}  // namespace rhnn

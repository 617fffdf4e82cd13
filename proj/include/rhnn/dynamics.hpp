#pragma once

#include "rhnn/complex.hpp"
#include "rhnn/network.hpp"
#include "rhnn/schedule.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rhnn {

inline constexpr std::uint64_t default_max_steps = 100'000;
inline constexpr Label default_initial_cap = 1024;

// A limit cycle as round-boundary labels, rotated so the smallest label is
// first. Length 1 is a stable state.
struct Cycle {
    std::vector<Label> states;

    std::size_t length() const noexcept { return states.size(); }
    std::string str() const;  // "22-119-92-94"

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Throws std::invalid_argument on empty input or duplicate labels.
Cycle canonicalize_cycle(std::vector<Label> labels);

// One entry per tick. For serial and layered schedules only every
// ticks_per_round-th state (a round boundary) determines the future, so
// cycle detection and the cycle itself use round-boundary states, while
// labels/states keep the fine-grained path. When a cycle was found,
// labels[tail_length ..] holds exactly one period, i.e.
// cycle->length() * ticks_per_round ticks.
template <class State>
struct BasicTrajectory {
    std::vector<Label> labels;
    std::vector<State> states;
    std::size_t ticks_per_round = 1;
    std::size_t tail_length = 0;
    std::optional<Cycle> cycle;

    std::size_t period_ticks() const { return cycle ? cycle->length() * ticks_per_round : 0; }
};

using Trajectory = BasicTrajectory<BipolarState>;
using ComplexTrajectory = BasicTrajectory<ComplexBipolarState>;

// Applies the schedule's tick map until a round-boundary state repeats.
// Budget exhaustion (max_steps ticks without a repeat) leaves cycle empty.
template <class S>
Trajectory iterate_until_cycle(const BasicNetwork<S>& net, const BipolarState& initial,
                               const UpdateSchedule& schedule, std::uint64_t max_steps = default_max_steps,
                               BitOrder order = BitOrder::msb_first);

// Runs exactly `ticks` ticks (states at ticks 0 .. ticks-1), no cycle detection.
template <class S>
Trajectory simulate(const BasicNetwork<S>& net, const BipolarState& initial, const UpdateSchedule& schedule,
                    std::uint64_t ticks, BitOrder order = BitOrder::msb_first);

ComplexTrajectory iterate_until_cycle(const ComplexNetwork& net, const ComplexBipolarState& initial,
                                      const UpdateSchedule& schedule,
                                      std::uint64_t max_steps = default_max_steps);

// ---- sweeps ---------------------------------------------------------------

struct Exhaustive {};
struct LabelRange {
    Label lo = 0;
    Label hi = 0;  // exclusive
};
struct ExplicitLabels {
    std::vector<Label> labels;
};
struct RandomSample {
    std::size_t count = 1;
    std::uint64_t seed = 0;
};
using InitialSource = std::variant<Exhaustive, LabelRange, ExplicitLabels, RandomSample>;

// Exhaustive when 2^width <= 1024, otherwise [0, 1024).
InitialSource default_initials(std::size_t width);

// Expands a source over the label space [0, 2^width). Random samples are
// distinct and drawn deterministically from the seed.
std::vector<Label> resolve_initials(const InitialSource& source, std::size_t width);

std::string describe(const InitialSource& source);

struct SweepConfig {
    InitialSource initials = Exhaustive{};
    UpdateSchedule schedule = UpdateSchedule::parallel();
    std::uint64_t max_steps = default_max_steps;
    BitOrder bit_order = BitOrder::msb_first;
};

struct CycleInventory {
    std::vector<Cycle> cycles;               // sorted
    std::vector<std::vector<Label>> basins;  // basins[k] are the initials ending in cycles[k], sorted
    std::vector<Label> unresolved;           // initials that exhausted the budget, sorted

    std::size_t resolved_count() const;
    std::size_t max_cycle_length() const;
    std::map<std::size_t, std::size_t> length_histogram() const;
    std::optional<std::size_t> cycle_index_of(Label initial) const;

    friend bool operator==(const CycleInventory&, const CycleInventory&) = default;
};

// OpenMP over initial states; aggregation is order-independent, so the
// result equals sweep_reference exactly.
template <class S>
CycleInventory sweep(const BasicNetwork<S>& net, const SweepConfig& config);
template <class S>
CycleInventory sweep_reference(const BasicNetwork<S>& net, const SweepConfig& config);

// Complex sweeps label states over 4^n via encode_label. Serial and parallel only.
CycleInventory sweep(const ComplexNetwork& net, const SweepConfig& config);
CycleInventory sweep_reference(const ComplexNetwork& net, const SweepConfig& config);

// ---- energy ---------------------------------------------------------------

template <class S>
struct EnergySample {
    std::uint64_t tick;
    Label label;
    S energy;
};

template <class S>
struct EnergyTrace {
    std::vector<EnergySample<S>> samples;
};

template <class S>
EnergyTrace<S> energy_trace(const BasicNetwork<S>& net, const Trajectory& traj);

struct EnergyProfile {
    enum class Kind { constant, oscillating };
    Kind kind = Kind::constant;
    std::size_t period = 1;  // ticks
    double mean = 0;         // over one period; equals the value when constant

    std::string str() const;
};

// Uses the final 2 * period_ticks samples, which must lie inside the cycle.
// Throws if the trace is shorter or if those two periods disagree.
template <class S>
EnergyProfile classify_energy_profile(const EnergyTrace<S>& trace, std::size_t period_ticks,
                                      double tolerance = 0.0);

// Replays a cycle for two periods from its first state and classifies it.
template <class S>
EnergyProfile cycle_energy_profile(const BasicNetwork<S>& net, const Cycle& cycle,
                                   const UpdateSchedule& schedule, BitOrder order = BitOrder::msb_first);

// ---- statistics and experiments -------------------------------------------

// Fraction of Hamming-1 neighbour pairs (both resolved in the inventory)
// that end in the same cycle.
struct HammingLocality {
    std::size_t pairs = 0;
    std::size_t shared = 0;
    double fraction() const { return pairs ? double(shared) / double(pairs) : 0.0; }
};
HammingLocality hamming_locality(const CycleInventory& inventory, std::size_t width);

enum class Polarity { mixed, non_negative, non_positive };
std::string to_string(Polarity p);
Polarity parse_polarity(const std::string& text);

// Integer weights uniform on the polarity's range with |w| <= magnitude,
// zero diagonal, zero thresholds. Deterministic per seed on every platform.
IntegerNetwork random_network(std::size_t n, Polarity polarity, std::int64_t magnitude, std::uint64_t seed);

// Seed used for trial k of an experiment seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct PolarityCounterexample {
    std::size_t trial;
    std::uint64_t seed;
    IntegerNetwork network;
    Cycle longest;
};

struct PolarityReport {
    std::size_t n = 0;
    Polarity polarity = Polarity::mixed;
    std::size_t trials = 0;
    std::map<std::size_t, std::size_t> cycle_length_histogram;  // over all cycles of all trials
    std::size_t networks_max_len_le2 = 0;
    std::size_t networks_with_long_cycles = 0;  // some cycle of length >= 2
    std::size_t networks_with_unresolved = 0;
    // Sign-definite polarities only: networks with a cycle longer than 2.
    std::vector<PolarityCounterexample> violations;

    double fraction_max_len_le2() const { return trials ? double(networks_max_len_le2) / double(trials) : 0.0; }
};

PolarityReport polarity_experiment(std::size_t n, Polarity polarity, std::size_t trials,
                                   const UpdateSchedule& schedule, std::uint64_t seed,
                                   std::int64_t magnitude = 20, std::uint64_t max_steps = default_max_steps);

}  // namespace rhnn

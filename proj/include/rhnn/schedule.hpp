#pragma once

#include "rhnn/network.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rhnn {

enum class UpdateMode { serial, parallel, layered };

std::string to_string(UpdateMode mode);
UpdateMode parse_update_mode(const std::string& text);

// Which neurons fire on each tick.
//   serial:   tick t updates neuron order[t % n]; a sweep is n ticks.
//   parallel: every tick updates all neurons from the same input.
//   layered:  tick t updates layer t % L; a round is L ticks.
// A seeded serial order is drawn once and then repeated every sweep.
class UpdateSchedule {
public:
    static UpdateSchedule parallel();
    static UpdateSchedule serial_cyclic(std::size_t n);
    static UpdateSchedule serial_order(std::vector<std::size_t> order);
    static UpdateSchedule serial_random(std::size_t n, std::uint64_t seed);
    static UpdateSchedule layered(LayerPartition partition);

    UpdateMode mode() const noexcept { return mode_; }
    const std::vector<std::size_t>& serial_order() const noexcept { return order_; }
    const LayerPartition& partition() const noexcept { return partition_; }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }

    // Ticks between states that fully determine the future trajectory.
    std::size_t ticks_per_round() const noexcept;

    // Throws dimension_error if the schedule was built for another order.
    void check_order(std::size_t n) const;

    std::string describe() const;

private:
    UpdateMode mode_ = UpdateMode::parallel;
    std::vector<std::size_t> order_;
    LayerPartition partition_;
    std::optional<std::uint64_t> seed_;
};

template <class S>
BipolarState apply_tick(const BasicNetwork<S>& net, const BipolarState& v, const UpdateSchedule& s,
                        std::uint64_t tick) {
    switch (s.mode()) {
        case UpdateMode::parallel:
            return step_parallel(net, v);
        case UpdateMode::serial:
            return step_serial(net, v, s.serial_order()[tick % s.serial_order().size()]);
        case UpdateMode::layered:
            return step_layered(net, v, s.partition(), tick % s.partition().size());
    }
    return v;
}

}  // namespace rhnn

#include "rhnn/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace rhnn {

LayerPartition::LayerPartition(std::vector<std::vector<std::size_t>> layers, std::size_t n)
    : layers_(std::move(layers)), n_(n) {
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    for (const auto& layer : layers_) {
        if (layer.empty()) throw std::invalid_argument("layer partition contains an empty layer");
        for (std::size_t i : layer) {
            if (i >= n) throw std::out_of_range("layer member " + std::to_string(i + 1) + " exceeds n");
            if (seen[i]) throw std::invalid_argument("neuron " + std::to_string(i + 1) + " appears in two layers");
            seen[i] = true;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("layer partition does not cover every neuron");
}

LayerPartition LayerPartition::singletons(std::size_t n) {
    std::vector<std::vector<std::size_t>> layers(n);
    for (std::size_t i = 0; i < n; ++i) layers[i] = {i};
    return LayerPartition(std::move(layers), n);
}

LayerPartition LayerPartition::whole(std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return LayerPartition({std::move(all)}, n);
}

namespace {

std::size_t parse_index(const std::string& tok, const std::string& spec) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty() || v == 0 || tok.front() == '-')
        throw std::invalid_argument("bad layer spec '" + spec + "'");
    return v - 1;
}

}  // namespace

LayerPartition LayerPartition::parse(const std::string& spec, std::size_t n) {
    std::vector<std::vector<std::size_t>> layers;
    std::stringstream layer_stream(spec);
    std::string layer_tok;
    while (std::getline(layer_stream, layer_tok, ',')) {
        std::vector<std::size_t> layer;
        std::stringstream member_stream(layer_tok);
        std::string member;
        while (std::getline(member_stream, member, '+')) {
            if (auto dash = member.find('-'); dash != std::string::npos && dash > 0) {
                const std::size_t lo = parse_index(member.substr(0, dash), spec);
                const std::size_t hi = parse_index(member.substr(dash + 1), spec);
                if (hi < lo) throw std::invalid_argument("bad layer range in '" + spec + "'");
                for (std::size_t i = lo; i <= hi; ++i) layer.push_back(i);
            } else {
                layer.push_back(parse_index(member, spec));
            }
        }
        layers.push_back(std::move(layer));
    }
    return LayerPartition(std::move(layers), n);
}

std::string LayerPartition::str() const {
    std::string s;
    for (std::size_t j = 0; j < layers_.size(); ++j) {
        if (j) s += ",";
        for (std::size_t k = 0; k < layers_[j].size(); ++k) {
            if (k) s += "+";
            s += std::to_string(layers_[j][k] + 1);
        }
    }
    return s;
}

std::string to_string(UpdateMode mode) {
    switch (mode) {
        case UpdateMode::serial: return "serial";
        case UpdateMode::parallel: return "parallel";
        case UpdateMode::layered: return "layered";
    }
    return "?";
}

UpdateMode parse_update_mode(const std::string& text) {
    if (text == "serial") return UpdateMode::serial;
    if (text == "parallel") return UpdateMode::parallel;
    if (text == "layered") return UpdateMode::layered;
    throw std::invalid_argument("unknown update mode '" + text + "'");
}

UpdateSchedule UpdateSchedule::parallel() { return {}; }

UpdateSchedule UpdateSchedule::serial_cyclic(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return serial_order(std::move(order));
}

UpdateSchedule UpdateSchedule::serial_order(std::vector<std::size_t> order) {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw std::invalid_argument("serial order is not a permutation of 0..n-1");
    if (order.empty()) throw std::invalid_argument("serial order is empty");
    UpdateSchedule s;
    s.mode_ = UpdateMode::serial;
    s.order_ = std::move(order);
    return s;
}

UpdateSchedule UpdateSchedule::serial_random(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    // Fisher-Yates with an explicit draw so the permutation does not depend
    // on the standard library's shuffle implementation.
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(order[i - 1], order[j]);
    }
    UpdateSchedule s = serial_order(std::move(order));
    s.seed_ = seed;
    return s;
}

UpdateSchedule UpdateSchedule::layered(LayerPartition partition) {
    if (partition.size() == 0) throw std::invalid_argument("layered schedule needs at least one layer");
    UpdateSchedule s;
    s.mode_ = UpdateMode::layered;
    s.partition_ = std::move(partition);
    return s;
}

std::size_t UpdateSchedule::ticks_per_round() const noexcept {
    switch (mode_) {
        case UpdateMode::serial: return order_.size();
        case UpdateMode::layered: return partition_.size();
        case UpdateMode::parallel: return 1;
    }
    return 1;
}

void UpdateSchedule::check_order(std::size_t n) const {
    if (mode_ == UpdateMode::serial && order_.size() != n)
        throw dimension_error("serial order has " + std::to_string(order_.size()) +
                              " neurons, network has " + std::to_string(n));
    if (mode_ == UpdateMode::layered && partition_.order() != n)
        throw dimension_error("layer partition covers " + std::to_string(partition_.order()) +
                              " neurons, network has " + std::to_string(n));
}

std::string UpdateSchedule::describe() const {
    switch (mode_) {
        case UpdateMode::parallel: return "parallel";
        case UpdateMode::layered: return "layered(" + partition_.str() + ")";
        case UpdateMode::serial: {
            std::string s = seed_ ? "serial(random seed=" + std::to_string(*seed_) + ", order=" : "serial(order=";
            for (std::size_t k = 0; k < order_.size(); ++k) {
                if (k) s += " ";
                s += std::to_string(order_[k] + 1);
            }
            return s + ")";
        }
    }
    return "?";
}

}  // namespace rhnn

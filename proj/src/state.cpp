#include "rhnn/state.hpp"

#include "rhnn/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rhnn {

std::string to_string(BitOrder order) {
    return order == BitOrder::msb_first ? "msb_first" : "lsb_first";
}

BitOrder parse_bit_order(const std::string& text) {
    if (text == "msb_first" || text == "msb") return BitOrder::msb_first;
    if (text == "lsb_first" || text == "lsb") return BitOrder::lsb_first;
    throw std::invalid_argument("unknown bit order '" + text + "'");
}

BipolarState::BipolarState(std::vector<std::int8_t> components) : v_(std::move(components)) {
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (v_[i] != 1 && v_[i] != -1)
            throw std::invalid_argument("state component " + std::to_string(i) +
                                        " is not bipolar: " + std::to_string(v_[i]));
}

BipolarState::BipolarState(std::initializer_list<int> components) {
    v_.reserve(components.size());
    for (int c : components) {
        if (c != 1 && c != -1)
            throw std::invalid_argument("state component is not bipolar: " + std::to_string(c));
        v_.push_back(static_cast<std::int8_t>(c));
    }
}

BipolarState BipolarState::with(std::size_t i, std::int8_t value) const {
    if (i >= v_.size()) throw std::out_of_range("neuron index " + std::to_string(i));
    if (value != 1 && value != -1) throw std::invalid_argument("component is not bipolar");
    BipolarState out = *this;
    out.v_[i] = value;
    return out;
}

BipolarState BipolarState::negated() const {
    BipolarState out = *this;
    for (auto& c : out.v_) c = static_cast<std::int8_t>(-c);
    return out;
}

std::int64_t BipolarState::dot(const BipolarState& other) const {
    if (other.size() != size()) throw dimension_error("dot: length mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * other.v_[i];
    return s;
}

std::size_t BipolarState::hamming(const BipolarState& other) const {
    if (other.size() != size()) throw dimension_error("hamming: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) d += v_[i] != other.v_[i];
    return d;
}

std::string BipolarState::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += v_[i] > 0 ? "1" : "-1";
    }
    return s + ")";
}

Label state_space_size(std::size_t n) {
    if (n > max_label_width)
        throw std::out_of_range("network order " + std::to_string(n) + " exceeds label width");
    return Label{1} << n;
}

BipolarState encode_state(Label label, std::size_t n, BitOrder order) {
    if (label >= state_space_size(n))
        throw std::out_of_range("label " + std::to_string(label) + " out of range for n=" +
                                std::to_string(n));
    std::vector<std::int8_t> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t bit = order == BitOrder::msb_first ? n - 1 - k : k;
        v[k] = ((label >> bit) & 1U) ? 1 : -1;
    }
    return BipolarState(std::move(v));
}

Label decode_state(const BipolarState& v, BitOrder order) {
    const std::size_t n = v.size();
    state_space_size(n);
    Label label = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] < 0) continue;
        const std::size_t bit = order == BitOrder::msb_first ? n - 1 - k : k;
        label |= Label{1} << bit;
    }
    return label;
}

BipolarState parse_bipolar(const std::string& text) {
    std::vector<std::int8_t> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "1" || tok == "+1") v.push_back(1);
        else if (tok == "-1") v.push_back(-1);
        else throw std::invalid_argument("bad bipolar component '" + tok + "'");
    }
    if (v.empty()) throw std::invalid_argument("empty state");
    return BipolarState(std::move(v));
}

}  // namespace rhnn

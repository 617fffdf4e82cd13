#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rhnn {

using Label = std::uint64_t;

// Widest network whose corners still fit a decimal Label.
inline constexpr std::size_t max_label_width = 62;

// Which bit of a decimal label drives neuron 0.
enum class BitOrder { msb_first, lsb_first };

std::string to_string(BitOrder order);
BitOrder parse_bit_order(const std::string& text);

// +1 for x >= 0, -1 otherwise. Ties go to +1.
template <class T>
constexpr std::int8_t sign_activation(const T& x) {
    return x >= T{} ? std::int8_t{1} : std::int8_t{-1};
}

// A corner of the bipolar hypercube {+1, -1}^n.
class BipolarState {
public:
    BipolarState() = default;
    explicit BipolarState(std::vector<std::int8_t> components);
    BipolarState(std::initializer_list<int> components);

    static BipolarState ones(std::size_t n) { return BipolarState(std::vector<std::int8_t>(n, 1)); }

    std::size_t size() const noexcept { return v_.size(); }
    std::int8_t operator[](std::size_t i) const { return v_[i]; }
    std::span<const std::int8_t> components() const noexcept { return v_; }

    BipolarState with(std::size_t i, std::int8_t value) const;
    BipolarState negated() const;
    std::int64_t dot(const BipolarState& other) const;
    std::size_t hamming(const BipolarState& other) const;

    std::string str() const;

    friend bool operator==(const BipolarState&, const BipolarState&) = default;
    friend auto operator<=>(const BipolarState&, const BipolarState&) = default;

private:
    std::vector<std::int8_t> v_;
};

// Bit 1 -> +1, bit 0 -> -1. Throws std::out_of_range when label >= 2^n.
BipolarState encode_state(Label label, std::size_t n, BitOrder order = BitOrder::msb_first);
Label decode_state(const BipolarState& v, BitOrder order = BitOrder::msb_first);

// Parses "1,-1,1" style component lists.
BipolarState parse_bipolar(const std::string& text);

Label state_space_size(std::size_t n);

}  // namespace rhnn

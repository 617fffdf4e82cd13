#pragma once

#include "rhnn/matrix.hpp"
#include "rhnn/rational.hpp"
#include "rhnn/state.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace rhnn {

// Weight matrix plus threshold vector. The matrix need not be symmetric.
// Scalar is std::int64_t for exact integer networks or double otherwise.
template <class Scalar>
class BasicNetwork {
public:
    using scalar_type = Scalar;

    BasicNetwork() = default;

    explicit BasicNetwork(Matrix<Scalar> weights, std::vector<Scalar> thresholds = {})
        : weights_(std::move(weights)), thresholds_(std::move(thresholds)) {
        require_square(weights_, "network weights");
        if (weights_.rows() == 0) throw dimension_error("network order must be positive");
        if (thresholds_.empty()) thresholds_.assign(weights_.rows(), Scalar{});
        if (thresholds_.size() != weights_.rows())
            throw dimension_error("threshold vector has length " + std::to_string(thresholds_.size()) +
                                  ", expected " + std::to_string(weights_.rows()));
        if constexpr (std::is_floating_point_v<Scalar>) {
            for (const auto& w : weights_.data())
                if (!std::isfinite(w)) throw std::invalid_argument("non-finite weight");
            for (const auto& t : thresholds_)
                if (!std::isfinite(t)) throw std::invalid_argument("non-finite threshold");
        }
    }

    std::size_t order() const noexcept { return weights_.rows(); }
    const Matrix<Scalar>& weights() const noexcept { return weights_; }
    std::span<const Scalar> thresholds() const noexcept { return thresholds_; }

    bool zero_thresholds() const {
        for (const auto& t : thresholds_)
            if (!(t == Scalar{})) return false;
        return true;
    }

    friend bool operator==(const BasicNetwork&, const BasicNetwork&) = default;

private:
    Matrix<Scalar> weights_;
    std::vector<Scalar> thresholds_;
};

using IntegerNetwork = BasicNetwork<std::int64_t>;
using Network = BasicNetwork<double>;

namespace detail {

template <class T>
void check_length(const Matrix<T>& w, const BipolarState& v, const char* what) {
    if (w.cols() != v.size())
        throw dimension_error(std::string(what) + ": state has length " + std::to_string(v.size()) +
                              ", network order is " + std::to_string(w.cols()));
}

// Row i of W times a bipolar vector, without multiplications.
template <class T>
T row_dot(const Matrix<T>& w, std::size_t i, const BipolarState& v) {
    T acc{};
    const auto row = w.row(i);
    const auto comps = v.components();
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (comps[j] > 0) acc += row[j];
        else acc -= row[j];
    }
    return acc;
}

template <class T>
bool approx_equal(const T& a, const T& b, double tolerance) {
    if constexpr (std::is_floating_point_v<T>) return std::abs(a - b) <= tolerance;
    else return a == b;
}

template <class T> struct half_type { using type = T; };
template <> struct half_type<std::int64_t> { using type = Rational; };

}  // namespace detail

// Sum_j W_ij v_j - T_i. Neuron indices are 0-based.
template <class S>
S local_field(const BasicNetwork<S>& net, const BipolarState& v, std::size_t i) {
    detail::check_length(net.weights(), v, "local_field");
    if (i >= net.order()) throw std::out_of_range("neuron index " + std::to_string(i));
    return detail::row_dot(net.weights(), i, v) - net.thresholds()[i];
}

template <class S>
BipolarState step_parallel(const BasicNetwork<S>& net, const BipolarState& v) {
    detail::check_length(net.weights(), v, "step_parallel");
    std::vector<std::int8_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = sign_activation(detail::row_dot(net.weights(), i, v) - net.thresholds()[i]);
    return BipolarState(std::move(out));
}

template <class S>
BipolarState step_serial(const BasicNetwork<S>& net, const BipolarState& v, std::size_t i) {
    return v.with(i, sign_activation(local_field(net, v, i)));
}

// Disjoint nonempty neuron sets covering 0..n-1. Layer order is the update order.
class LayerPartition {
public:
    LayerPartition() = default;
    LayerPartition(std::vector<std::vector<std::size_t>> layers, std::size_t n);

    static LayerPartition singletons(std::size_t n);
    static LayerPartition whole(std::size_t n);
    // "1-3,4-7" or "1+3+5,2+4": comma separates layers, 1-based indices.
    static LayerPartition parse(const std::string& spec, std::size_t n);

    std::size_t size() const noexcept { return layers_.size(); }
    std::size_t order() const noexcept { return n_; }
    const std::vector<std::size_t>& layer(std::size_t j) const { return layers_.at(j); }
    const std::vector<std::vector<std::size_t>>& layers() const noexcept { return layers_; }
    std::string str() const;

    friend bool operator==(const LayerPartition&, const LayerPartition&) = default;

private:
    std::vector<std::vector<std::size_t>> layers_;
    std::size_t n_ = 0;
};

// Updates every neuron of layer j from the same input state; others are held.
template <class S>
BipolarState step_layered(const BasicNetwork<S>& net, const BipolarState& v,
                          const LayerPartition& p, std::size_t j) {
    detail::check_length(net.weights(), v, "step_layered");
    if (p.order() != net.order()) throw dimension_error("step_layered: partition order mismatch");
    if (j >= p.size()) throw std::out_of_range("layer index " + std::to_string(j));
    std::vector<std::int8_t> out(v.components().begin(), v.components().end());
    for (std::size_t i : p.layer(j))
        out[i] = sign_activation(detail::row_dot(net.weights(), i, v) - net.thresholds()[i]);
    return BipolarState(std::move(out));
}

// (W + W^T) / 2. Integer input yields exact rationals.
template <class T>
Matrix<typename detail::half_type<T>::type> symmetric_part(const Matrix<T>& w) {
    using H = typename detail::half_type<T>::type;
    require_square(w, "symmetric_part");
    Matrix<H> s(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            s(i, j) = (H(w(i, j)) + H(w(j, i))) / H(2);
    return s;
}

// v^T W v, no 1/2 factor and no threshold term.
template <class T>
T quadratic_form(const Matrix<T>& w, const BipolarState& v) {
    require_square(w, "quadratic_form");
    detail::check_length(w, v, "quadratic_form");
    T e{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const T r = detail::row_dot(w, i, v);
        if (v[i] > 0) e += r;
        else e -= r;
    }
    return e;
}

template <class S>
S quadratic_energy(const BasicNetwork<S>& net, const BipolarState& v) {
    return quadratic_form(net.weights(), v);
}

template <class S>
bool is_stable(const BasicNetwork<S>& net, const BipolarState& v) {
    return step_parallel(net, v) == v;
}

// u = -Sign(W u), evaluated without thresholds.
template <class T>
bool is_antistable(const Matrix<T>& w, const BipolarState& v) {
    require_square(w, "is_antistable");
    detail::check_length(w, v, "is_antistable");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != -sign_activation(detail::row_dot(w, i, v))) return false;
    return true;
}

// Returns lambda when W v = lambda v componentwise (within tolerance for
// floating point; exact otherwise).
template <class T>
std::optional<T> corner_eigen_check(const Matrix<T>& w, const BipolarState& v, double tolerance = 1e-9) {
    require_square(w, "corner_eigen_check");
    detail::check_length(w, v, "corner_eigen_check");
    if (tolerance < 0) throw std::invalid_argument("negative tolerance");
    if (v.size() == 0) return std::nullopt;
    auto component = [&](std::size_t i) {
        const T r = detail::row_dot(w, i, v);
        return v[i] > 0 ? r : T{} - r;  // (Wv)_i / v_i
    };
    const T lambda = component(0);
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!detail::approx_equal(component(i), lambda, tolerance)) return std::nullopt;
    return lambda;
}

template <class T>
Matrix<double> to_double(const Matrix<T>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<T, Rational>) out(i, j) = m(i, j).to_double();
            else out(i, j) = static_cast<double>(m(i, j));
        }
    return out;
}

}  // namespace rhnn

#include "rhnn/complex.hpp"

#include <cmath>
#include <stdexcept>

namespace rhnn {

Complex csign(Complex z) {
    return {double(sign_activation(z.real())), double(sign_activation(z.imag()))};
}

ComplexBipolarState::ComplexBipolarState(BipolarState re, BipolarState im)
    : re_(std::move(re)), im_(std::move(im)) {
    if (re_.size() != im_.size()) throw dimension_error("complex state: real/imag length mismatch");
}

namespace {

std::int8_t unit_sign(double x) {
    if (x == 1.0) return 1;
    if (x == -1.0) return -1;
    throw std::invalid_argument("complex state component is not a hypercube corner");
}

}  // namespace

ComplexBipolarState::ComplexBipolarState(const std::vector<Complex>& components) {
    std::vector<std::int8_t> re, im;
    re.reserve(components.size());
    im.reserve(components.size());
    for (const auto& c : components) {
        re.push_back(unit_sign(c.real()));
        im.push_back(unit_sign(c.imag()));
    }
    re_ = BipolarState(std::move(re));
    im_ = BipolarState(std::move(im));
}

ComplexBipolarState ComplexBipolarState::with(std::size_t i, Complex corner) const {
    return {re_.with(i, unit_sign(corner.real())), im_.with(i, unit_sign(corner.imag()))};
}

std::string ComplexBipolarState::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += re_[i] > 0 ? "1" : "-1";
        s += im_[i] > 0 ? "+j" : "-j";
    }
    return s + ")";
}

Label encode_label(const ComplexBipolarState& v) {
    const std::size_t n = v.size();
    state_space_size(2 * n);
    Label label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        label <<= 1;
        label |= v.real_signs()[i] > 0;
        label <<= 1;
        label |= v.imag_signs()[i] > 0;
    }
    return label;
}

ComplexBipolarState decode_complex_state(Label label, std::size_t n) {
    if (label >= state_space_size(2 * n))
        throw std::out_of_range("complex label " + std::to_string(label) + " out of range for n=" +
                                std::to_string(n));
    std::vector<std::int8_t> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t shift = 2 * (n - 1 - i);
        re[i] = ((label >> (shift + 1)) & 1U) ? 1 : -1;
        im[i] = ((label >> shift) & 1U) ? 1 : -1;
    }
    return {BipolarState(std::move(re)), BipolarState(std::move(im))};
}

ComplexNetwork::ComplexNetwork(Matrix<Complex> weights, std::vector<Complex> thresholds)
    : weights_(std::move(weights)), thresholds_(std::move(thresholds)) {
    require_square(weights_, "complex network weights");
    if (weights_.rows() == 0) throw dimension_error("network order must be positive");
    if (thresholds_.empty()) thresholds_.assign(weights_.rows(), Complex{});
    if (thresholds_.size() != weights_.rows()) throw dimension_error("complex threshold length mismatch");
    for (const auto& w : weights_.data())
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw std::invalid_argument("non-finite complex weight");
    for (const auto& t : thresholds_)
        if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
            throw std::invalid_argument("non-finite complex threshold");
}

namespace {

void check_length(const ComplexNetwork& net, const ComplexBipolarState& v, const char* what) {
    if (v.size() != net.order())
        throw dimension_error(std::string(what) + ": state has length " + std::to_string(v.size()) +
                              ", network order is " + std::to_string(net.order()));
}

Complex row_product(const ComplexNetwork& net, const ComplexBipolarState& v, std::size_t i) {
    Complex acc{};
    const auto row = net.weights().row(i);
    for (std::size_t k = 0; k < row.size(); ++k) acc += row[k] * v[k];
    return acc - net.thresholds()[i];
}

}  // namespace

Complex complex_local_field(const ComplexNetwork& net, const ComplexBipolarState& v, std::size_t i) {
    check_length(net, v, "complex_local_field");
    if (i >= net.order()) throw std::out_of_range("neuron index " + std::to_string(i));
    return row_product(net, v, i);
}

ComplexBipolarState cstep_parallel(const ComplexNetwork& net, const ComplexBipolarState& v) {
    check_length(net, v, "cstep_parallel");
    std::vector<std::int8_t> re(v.size()), im(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex f = row_product(net, v, i);
        re[i] = sign_activation(f.real());
        im[i] = sign_activation(f.imag());
    }
    return {BipolarState(std::move(re)), BipolarState(std::move(im))};
}

ComplexBipolarState cstep_serial(const ComplexNetwork& net, const ComplexBipolarState& v, std::size_t i) {
    return v.with(i, csign(complex_local_field(net, v, i)));
}

bool is_cstable(const ComplexNetwork& net, const ComplexBipolarState& v) {
    return cstep_parallel(net, v) == v;
}

double complex_energy_diagnostic(const ComplexNetwork& net, const ComplexBipolarState& v) {
    check_length(net, v, "complex_energy_diagnostic");
    Complex e{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        Complex r{};
        const auto row = net.weights().row(i);
        for (std::size_t k = 0; k < row.size(); ++k) r += row[k] * v[k];
        e += std::conj(v[i]) * r;
    }
    return e.real();
}

Network realify(const ComplexNetwork& net) {
    const std::size_t n = net.order();
    Matrix<double> w(2 * n, 2 * n);
    std::vector<double> t(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex c = net.weights()(i, k);
            w(i, k) = c.real();
            w(i, n + k) = -c.imag();
            w(n + i, k) = c.imag();
            w(n + i, n + k) = c.real();
        }
        t[i] = net.thresholds()[i].real();
        t[n + i] = net.thresholds()[i].imag();
    }
    return Network(std::move(w), std::move(t));
}

BipolarState stack(const ComplexBipolarState& v) {
    std::vector<std::int8_t> out;
    out.reserve(2 * v.size());
    for (auto c : v.real_signs().components()) out.push_back(c);
    for (auto c : v.imag_signs().components()) out.push_back(c);
    return BipolarState(std::move(out));
}

ComplexBipolarState unstack(const BipolarState& stacked) {
    if (stacked.size() % 2) throw dimension_error("unstack: odd length");
    const std::size_t n = stacked.size() / 2;
    const auto c = stacked.components();
    return {BipolarState(std::vector<std::int8_t>(c.begin(), c.begin() + n)),
            BipolarState(std::vector<std::int8_t>(c.begin() + n, c.end()))};
}

}  // namespace rhnn

#pragma once

#include "rhnn/network.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace rhnn {

using Complex = std::complex<double>;

// Sign(Re z) + j Sign(Im z), with Sign(0) = +1 on both parts.
Complex csign(Complex z);

// A corner of the complex hypercube {+-1 +- j}^n, held as two bipolar sign
// vectors.
class ComplexBipolarState {
public:
    ComplexBipolarState() = default;
    ComplexBipolarState(BipolarState re, BipolarState im);
    explicit ComplexBipolarState(const std::vector<Complex>& components);

    std::size_t size() const noexcept { return re_.size(); }
    Complex operator[](std::size_t i) const { return {double(re_[i]), double(im_[i])}; }
    const BipolarState& real_signs() const noexcept { return re_; }
    const BipolarState& imag_signs() const noexcept { return im_; }

    ComplexBipolarState with(std::size_t i, Complex corner) const;
    std::string str() const;

    friend bool operator==(const ComplexBipolarState&, const ComplexBipolarState&) = default;

private:
    BipolarState re_;
    BipolarState im_;
};

// Two bits per neuron, neurons MSB-first, real sign before imaginary sign.
Label encode_label(const ComplexBipolarState& v);
ComplexBipolarState decode_complex_state(Label label, std::size_t n);

class ComplexNetwork {
public:
    ComplexNetwork() = default;
    explicit ComplexNetwork(Matrix<Complex> weights, std::vector<Complex> thresholds = {});

    std::size_t order() const noexcept { return weights_.rows(); }
    const Matrix<Complex>& weights() const noexcept { return weights_; }
    std::span<const Complex> thresholds() const noexcept { return thresholds_; }

    friend bool operator==(const ComplexNetwork&, const ComplexNetwork&) = default;

private:
    Matrix<Complex> weights_;
    std::vector<Complex> thresholds_;
};

Complex complex_local_field(const ComplexNetwork& net, const ComplexBipolarState& v, std::size_t i);
ComplexBipolarState cstep_parallel(const ComplexNetwork& net, const ComplexBipolarState& v);
ComplexBipolarState cstep_serial(const ComplexNetwork& net, const ComplexBipolarState& v, std::size_t i);
bool is_cstable(const ComplexNetwork& net, const ComplexBipolarState& v);

// Re(v^H W v). Nonstandard, diagnostic only: no energy function is
// established for the asymmetric complex network.
double complex_energy_diagnostic(const ComplexNetwork& net, const ComplexBipolarState& v);

// Real network of order 2n acting on (Re v; Im v) through [Re W, -Im W; Im W, Re W].
Network realify(const ComplexNetwork& net);
BipolarState stack(const ComplexBipolarState& v);
ComplexBipolarState unstack(const BipolarState& stacked);

}  // namespace rhnn

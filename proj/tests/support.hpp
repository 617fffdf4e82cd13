#pragma once

#include "oracle.hpp"

#include "rhnn/network.hpp"

namespace test_support {

inline rhnn::Matrix<std::int64_t> to_matrix(const oracle::IntMatrix& w) {
    const std::size_t n = w.size();
    rhnn::Matrix<std::int64_t> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = w[i][j];
    return m;
}

inline rhnn::IntegerNetwork to_network(const oracle::IntMatrix& w) { return rhnn::IntegerNetwork(to_matrix(w)); }

inline rhnn::BipolarState to_state(const oracle::Vec& v) {
    std::vector<std::int8_t> c(v.begin(), v.end());
    return rhnn::BipolarState(std::move(c));
}

inline const rhnn::IntegerNetwork& toy() {
    static const rhnn::IntegerNetwork net = to_network(oracle::toy7);
    return net;
}

inline rhnn::BipolarState toy_state(rhnn::Label label) { return rhnn::encode_state(label, 7); }

}  // namespace test_support

#pragma once

#include "rhnn/network.hpp"
#include "rhnn/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace rhnn {

// A corner together with the eigenvalue magnitude it should carry
// (mu for stable patterns, beta for anti-stable ones). value > 0.
struct PatternSpec {
    BipolarState pattern;
    Rational value;
};

// Thrown when two patterns that must be orthogonal are not. Indices refer
// to the concatenation stable ++ antistable.
class not_orthogonal_error : public std::invalid_argument {
public:
    not_orthogonal_error(std::size_t first, std::size_t second, std::int64_t dot);
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }
    std::int64_t dot() const noexcept { return dot_; }

private:
    std::size_t first_;
    std::size_t second_;
    std::int64_t dot_;
};

bool check_orthogonal(const std::vector<BipolarState>& patterns);
std::optional<std::pair<std::size_t, std::size_t>> find_non_orthogonal_pair(
    const std::vector<BipolarState>& patterns);

// Sum_j (mu_j / n) X_j X_j^T. Each X_j is an eigenvector with eigenvalue mu_j.
Matrix<Rational> synthesize_stable(const std::vector<PatternSpec>& specs, std::size_t n);

// Sum_j (mu_j / n) X_j X_j^T - Sum_j (beta_j / n) Y_j Y_j^T.
Matrix<Rational> synthesize_mixed(const std::vector<PatternSpec>& stable,
                                  const std::vector<PatternSpec>& antistable, std::size_t n);

template <class T>
Matrix<T> zero_diagonal(const Matrix<T>& w) {
    require_square(w, "zero_diagonal");
    Matrix<T> out = w;
    for (std::size_t i = 0; i < w.rows(); ++i) out(i, i) = T{};
    return out;
}

template <class T>
Matrix<T> shift_diagonal(const Matrix<T>& w, const T& c) {
    require_square(w, "shift_diagonal");
    Matrix<T> out = w;
    for (std::size_t i = 0; i < w.rows(); ++i) out(i, i) += c;
    return out;
}

enum class PatternRole { stable, antistable };

struct LandscapeEntry {
    BipolarState pattern;
    std::optional<Label> label;
    PatternRole role;
    bool verified;
    std::optional<double> eigenvalue;
};

struct LandscapeReport {
    std::vector<LandscapeEntry> entries;
    bool all_verified() const;
};

// Stable claims are checked against W v (T = 0), anti-stable claims against
// -Sign(W v). Eigenvalues are attached when the corner is an eigenvector.
template <class T>
LandscapeReport verify_landscape(const Matrix<T>& w, const std::vector<BipolarState>& stable_claims,
                                 const std::vector<BipolarState>& antistable_claims) {
    require_square(w, "verify_landscape");
    LandscapeReport report;
    auto add = [&](const BipolarState& v, PatternRole role) {
        detail::check_length(w, v, "verify_landscape");
        LandscapeEntry e{v, std::nullopt, role, false, std::nullopt};
        if (v.size() <= max_label_width) e.label = decode_state(v);
        if (role == PatternRole::stable) {
            bool stable = true;
            for (std::size_t i = 0; i < v.size() && stable; ++i)
                stable = sign_activation(detail::row_dot(w, i, v)) == v[i];
            e.verified = stable;
        } else {
            e.verified = is_antistable(w, v);
        }
        if (auto lambda = corner_eigen_check(w, v)) {
            if constexpr (std::is_same_v<T, Rational>) e.eigenvalue = lambda->to_double();
            else e.eigenvalue = static_cast<double>(*lambda);
        }
        report.entries.push_back(std::move(e));
    };
    for (const auto& v : stable_claims) add(v, PatternRole::stable);
    for (const auto& v : antistable_claims) add(v, PatternRole::antistable);
    return report;
}

using AnyNetwork = std::variant<IntegerNetwork, Network>;

// Integer matrices stay exact; anything with a fractional entry becomes double.
AnyNetwork to_network(const Matrix<Rational>& w);

}  // namespace rhnn

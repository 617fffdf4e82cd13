#include "rhnn/synthesis.hpp"

namespace rhnn {

not_orthogonal_error::not_orthogonal_error(std::size_t first, std::size_t second, std::int64_t dot)
    : std::invalid_argument("patterns " + std::to_string(first) + " and " + std::to_string(second) +
                            " are not orthogonal (dot product " + std::to_string(dot) + ")"),
      first_(first),
      second_(second),
      dot_(dot) {}

std::optional<std::pair<std::size_t, std::size_t>> find_non_orthogonal_pair(
    const std::vector<BipolarState>& patterns) {
    for (std::size_t a = 0; a < patterns.size(); ++a)
        for (std::size_t b = a + 1; b < patterns.size(); ++b)
            if (patterns[a].dot(patterns[b]) != 0) return std::pair{a, b};
    return std::nullopt;
}

bool check_orthogonal(const std::vector<BipolarState>& patterns) {
    return !find_non_orthogonal_pair(patterns).has_value();
}

Matrix<Rational> synthesize_mixed(const std::vector<PatternSpec>& stable,
                                  const std::vector<PatternSpec>& antistable, std::size_t n) {
    if (n == 0) throw dimension_error("synthesis order must be positive");
    if (stable.empty() && antistable.empty()) throw std::invalid_argument("empty pattern spec list");
    if (stable.size() + antistable.size() > n)
        throw std::invalid_argument(std::to_string(stable.size() + antistable.size()) +
                                    " patterns exceed order n=" + std::to_string(n));

    std::vector<BipolarState> all;
    for (const auto* list : {&stable, &antistable})
        for (const auto& s : *list) {
            if (s.pattern.size() != n)
                throw dimension_error("pattern length " + std::to_string(s.pattern.size()) +
                                      " does not match n=" + std::to_string(n));
            if (s.value <= Rational(0))
                throw std::invalid_argument("pattern value must be positive, got " + s.value.str());
            all.push_back(s.pattern);
        }
    if (auto pair = find_non_orthogonal_pair(all))
        throw not_orthogonal_error(pair->first, pair->second, all[pair->first].dot(all[pair->second]));

    Matrix<Rational> w(n, n);
    const Rational order(static_cast<std::int64_t>(n));
    auto accumulate = [&](const PatternSpec& s, int sign) {
        const Rational scale = s.value / order;
        const Rational pos = sign > 0 ? scale : -scale;
        const Rational neg = -pos;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w(i, j) += s.pattern[i] == s.pattern[j] ? pos : neg;
    };
    for (const auto& s : stable) accumulate(s, +1);
    for (const auto& s : antistable) accumulate(s, -1);
    return w;
}

Matrix<Rational> synthesize_stable(const std::vector<PatternSpec>& specs, std::size_t n) {
    if (specs.empty()) throw std::invalid_argument("empty pattern spec list");
    return synthesize_mixed(specs, {}, n);
}

bool LandscapeReport::all_verified() const {
    for (const auto& e : entries)
        if (!e.verified) return false;
    return true;
}

AnyNetwork to_network(const Matrix<Rational>& w) {
    bool integral = true;
    for (const auto& x : w.data()) integral = integral && x.is_integer();
    if (integral) {
        std::vector<std::int64_t> data;
        data.reserve(w.data().size());
        for (const auto& x : w.data()) data.push_back(x.num());
        return IntegerNetwork(Matrix<std::int64_t>(w.rows(), w.cols(), std::move(data)));
    }
    return Network(to_double(w));
}

}  // namespace rhnn

#include "motifscope/rational.hpp"

namespace motifscope {

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    size_t n = b.size();
    if (a.size() != n) throw std::invalid_argument("solve_linear expects a square system");
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational factor = a[row][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] - factor * a[col][j];
            b[row] = b[row] - factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

BigInt lcm_range(uint64_t lo, uint64_t hi) {
    BigInt l = 1;
    for (uint64_t v = lo; v <= hi; ++v) l = boost::multiprecision::lcm(l, BigInt(v));
    return l;
}

BigInt common_denominator(const std::vector<Rational>& xs) {
    BigInt l = 1;
    for (const auto& x : xs) l = boost::multiprecision::lcm(l, x.den());
    return l;
}

}  // namespace motifscope

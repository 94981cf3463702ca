#ifndef MOTIFSCOPE_RATIONAL_HPP
#define MOTIFSCOPE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace motifscope {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always normalized with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

// Solves A x = b by exact Gaussian elimination. A is square, row-major.
// Throws std::domain_error on a singular matrix.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b);

BigInt lcm_range(uint64_t lo, uint64_t hi);

// Least common multiple of the denominators.
BigInt common_denominator(const std::vector<Rational>& xs);

}  // namespace motifscope

#endif

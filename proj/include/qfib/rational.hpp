#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qfib {

/// Exact fraction with normalized sign and lowest terms; sized for the
/// group-theoretic quantities here (denominators are group orders).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    bool operator==(const Rational&) const = default;
    auto operator<=>(const Rational& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace qfib

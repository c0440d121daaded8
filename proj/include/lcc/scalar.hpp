#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace lcc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Stored in lowest terms with positive denominator;
/// every operation is exact, there is no floating point anywhere in the engine.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long long n) : v_(n) {}
    Scalar(const BigInt& n) : v_(n) {}
    Scalar(const BigInt& num, const BigInt& den);
    Scalar(long long num, long long den) : Scalar(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
    static Scalar parse(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar reciprocal() const;
    Scalar abs() const { return is_negative() ? -*this : *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    /// "p" when integral, "p/q" otherwise; negatives carry a leading '-'.
    std::string str() const;

private:
    boost::multiprecision::cpp_rational v_;
    explicit Scalar(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
};

} // namespace lcc

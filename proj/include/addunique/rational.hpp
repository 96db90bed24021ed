#ifndef ADDUNIQUE_RATIONAL_HPP
#define ADDUNIQUE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace addunique {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Two rationals compare equal iff their stored parts do.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    /// Parses "a" or "a/b" in decimal.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace addunique

#endif  // ADDUNIQUE_RATIONAL_HPP

#ifndef ADDUNIQUE_ARITH_HPP
#define ADDUNIQUE_ARITH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "addunique/rational.hpp"

namespace addunique {

using Int = std::int64_t;

bool is_prime(Int n);

/// Integer power p^e; throws std::overflow_error past Int range.
Int ipow(Int p, int e);

/// An atom of a multiplicative function: the prime power p^e with e >= 1.
struct PrimePower {
    Int p = 2;
    int e = 1;

    PrimePower() = default;
    /// Validates primality of p and e >= 1.
    PrimePower(Int prime, int exponent);

    Int value() const { return ipow(p, e); }
    std::string str() const;

    friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Prime powers with strictly increasing primes; empty for 1.
using Factorization = std::vector<PrimePower>;

/// Trial division up to sqrt(n). Throws std::invalid_argument for n <= 0.
Factorization factorize(Int n);

/// Throws std::invalid_argument for gcd(0, 0) or negative inputs.
Int gcd(Int a, Int b);

/// Integer-coefficient polynomial, constant term first, leading coefficient
/// nonzero.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    const BigInt& leading() const { return coeffs_.back(); }
    const BigInt& constant() const { return coeffs_.front(); }

    Rational evaluate(const Rational& x) const;

    /// Content removed and leading coefficient made positive.
    IntPolynomial primitive() const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    /// Throws std::invalid_argument when the difference vanishes.
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string str() const;

private:
    std::vector<BigInt> coeffs_;
};

/// Candidate set ±(divisor of constant)/(divisor of leading), reduced and
/// deduplicated, in ascending order. Zero is a candidate iff the constant
/// term vanishes.
std::vector<Rational> rational_root_candidates(const IntPolynomial& poly);

/// Exactly the distinct rational roots, ascending.
std::vector<Rational> rational_roots(const IntPolynomial& poly);

}  // namespace addunique

#endif  // ADDUNIQUE_ARITH_HPP

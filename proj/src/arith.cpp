#include "addunique/arith.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace addunique {

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Int ipow(Int p, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<Int>::max() / p) {
            throw std::overflow_error("ipow: overflow");
        }
        r *= p;
    }
    return r;
}

PrimePower::PrimePower(Int prime, int exponent) : p(prime), e(exponent) {
    if (!is_prime(prime) || exponent < 1) {
        throw std::invalid_argument("PrimePower: invalid atom " + std::to_string(prime) + "^" +
                                    std::to_string(exponent));
    }
}

std::string PrimePower::str() const {
    return e == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(e);
}

Factorization factorize(Int n) {
    if (n <= 0) {
        throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
    }
    Factorization atoms;
    auto take = [&](Int d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) {
            PrimePower pp;
            pp.p = d;
            pp.e = e;
            atoms.push_back(pp);
        }
    };
    take(2);
    take(3);
    for (Int d = 5; d <= n / d; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) {
        PrimePower pp;
        pp.p = n;
        pp.e = 1;
        atoms.push_back(pp);
    }
    return atoms;
}

Int gcd(Int a, Int b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("gcd: arguments must be non-negative");
    }
    if (a == 0 && b == 0) {
        throw std::invalid_argument("gcd: gcd(0, 0) is undefined");
    }
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        throw std::invalid_argument("IntPolynomial: zero polynomial");
    }
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    // Horner over the rationals.
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::primitive() const {
    BigInt g = 0;
    for (const BigInt& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    if (leading() < 0) g = -g;
    std::vector<BigInt> out = coeffs_;
    for (BigInt& c : out) c /= g;
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str() const {
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c.is_zero()) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) s += mag.str();
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_root_candidates(const IntPolynomial& poly) {
    const auto& c = poly.coefficients();
    // Strip the x^j factor so the constant term is nonzero.
    std::size_t low = 0;
    while (c[low].is_zero()) ++low;

    std::set<Rational> cands;
    if (low > 0) cands.insert(Rational());
    for (const BigInt& p : positive_divisors(c[low])) {
        for (const BigInt& q : positive_divisors(poly.leading())) {
            Rational r(p, q);
            cands.insert(r);
            cands.insert(-r);
        }
    }
    return {cands.begin(), cands.end()};
}

std::vector<Rational> rational_roots(const IntPolynomial& poly) {
    std::vector<Rational> roots;
    for (const Rational& cand : rational_root_candidates(poly)) {
        if (poly.evaluate(cand).is_zero()) {
            roots.push_back(cand);
        }
    }
    return roots;
}

}  // namespace addunique

#include <algorithm>
#include <stdexcept>

#include "addunique/engine.hpp"
#include "addunique/errors.hpp"

namespace addunique {

namespace {

IntPolynomial poly(std::initializer_list<std::int64_t> coeffs) {
    std::vector<BigInt> c;
    for (auto v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

std::vector<Int> ones_then(int ones, std::initializer_list<Int> rest) {
    std::vector<Int> parts(static_cast<std::size_t>(ones), 1);
    parts.insert(parts.end(), rest);
    return parts;
}

}  // namespace

std::vector<Rational> seed_residuals(int k, const SeedSolution& s) {
    const Rational& a = s.f2;
    const Rational& b = s.f3;
    const Rational& c = s.f5;
    if (k == 4) {
        // f(6), f(10), f(15) each computed along a 4-part identity and
        // along multiplicativity.
        return {a * b - (Rational(3) + b),
                a * c - (Rational(1) + Rational(3) * b),
                b * c - (Rational(3) * b + a * b)};
    }
    if (k >= 5) {
        // Two k-part representations each of k+14, k+9 and k+15.
        return {a * b + a * c - (Rational(1) + b * c),
                Rational(2) * b + a * b - (Rational(2) + a * c),
                Rational(1) + Rational(3) * a * b - (Rational(3) * b + a * c)};
    }
    throw std::invalid_argument("seed_residuals: requires k >= 4");
}

SeedAnalysis analyze_seed_system(int k) {
    if (k < 4) throw std::invalid_argument("seed system requires k >= 4");
    SeedAnalysis out;
    out.k = k;

    if (k == 4) {
        out.sources = {identity_for({1, 1, 1, 3}), identity_for({1, 3, 3, 3}),
                       identity_for({3, 3, 3, 6})};
        // a = (b + 3)/b and c = (4b + 3)/b; then ac = 1 + 3b clears to
        // (b + 3)(4b + 3) = b^2 (3b + 1).
        out.cubic = (poly({3, 1}) * poly({3, 4}) - poly({0, 0, 1}) * poly({1, 3})).primitive();
        // With b = 0 the first equation reads 0 = 3 whatever a is.
        Rational r1 = seed_residuals(k, {Rational(1), Rational(0), Rational(1)})[0];
        Rational r2 = seed_residuals(k, {Rational(-7), Rational(0), Rational(5)})[0];
        if (r1 != r2 || r1.is_zero()) throw EliminationMismatch("k=4: b = 0 guard failed");
        out.zero_guard = "b = 0 turns f(2)f(3) = 3 + f(3) into 0 = 3";
    } else {
        int ones = k - 2;
        out.sources = {identity_for(ones_then(ones, {6, 10})), identity_for(ones_then(ones, {1, 15})),
                       identity_for(ones_then(k - 3, {3, 3, 6})), identity_for(ones_then(k - 3, {1, 1, 10})),
                       identity_for(ones_then(k - 4, {1, 6, 6, 6})), identity_for(ones_then(k - 4, {3, 3, 3, 10}))};
        // Equations two and three give a = (5b - 3)/(2b); equation one then
        // gives c = (7b - 6)/b; equation three clears to
        // (5b - 3)(7b - 6) = b^2 (9b - 7).
        out.cubic = (poly({-3, 5}) * poly({-6, 7}) - poly({0, 0, 1}) * poly({-7, 9})).primitive();
        // With b = 0 equations two and three force ac = -2 and ac = 1.
        for (const Rational& ac : {Rational(-2), Rational(1)}) {
            SeedSolution probe{Rational(1), Rational(0), ac};
            auto r = seed_residuals(k, probe);
            if (r[1].is_zero() && r[2].is_zero()) throw EliminationMismatch("b = 0 guard failed");
        }
        out.zero_guard = "b = 0 makes 2f(3) + f(2)f(3) = 2 + f(2)f(5) and "
                         "1 + 3f(2)f(3) = 3f(3) + f(2)f(5) demand f(2)f(5) = -2 and 1";
    }

    out.roots = rational_roots(out.cubic);
    for (const Rational& b : out.roots) {
        if (b.is_zero()) throw EliminationMismatch("zero root of the eliminated cubic");
        SeedSolution s;
        s.f3 = b;
        if (k == 4) {
            s.f2 = (b + Rational(3)) / b;
            s.f5 = (Rational(4) * b + Rational(3)) / b;
        } else {
            s.f2 = (Rational(5) * b - Rational(3)) / (Rational(2) * b);
            s.f5 = (Rational(7) * b - Rational(6)) / b;
        }
        for (const Rational& r : seed_residuals(k, s)) {
            if (!r.is_zero()) {
                throw EliminationMismatch("back-substituted triple (" + s.f2.str() + ", " + s.f3.str() +
                                          ", " + s.f5.str() + ") fails the seed system");
            }
        }
        out.solutions.push_back(s);
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

std::vector<SeedSolution> solve_seed_system(int k) { return analyze_seed_system(k).solutions; }

}  // namespace addunique

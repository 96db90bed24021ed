#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "addunique/engine.hpp"
#include "addunique/errors.hpp"
#include "addunique/triangular.hpp"

using namespace addunique;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

PartialMultFn fn(std::initializer_list<std::pair<PrimePower, Rational>> atoms) {
    PartialMultFn f;
    for (const auto& [a, v] : atoms) f.set(a, v);
    return f;
}

PartialMultFn seeded(const SeedSolution& s) {
    return fn({{PrimePower(2, 1), s.f2}, {PrimePower(3, 1), s.f3}, {PrimePower(5, 1), s.f5}});
}

IntPolynomial poly(std::initializer_list<std::int64_t> c) {
    std::vector<BigInt> v;
    for (auto x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

// Both sides of an identity, when fully known.
std::optional<std::pair<Rational, Rational>> sides(const PartialMultFn& f, const Identity& id) {
    EvalResult lhs = f.evaluate(id.total);
    if (!lhs.known()) return std::nullopt;
    Rational rhs;
    for (Int p : id.parts) {
        EvalResult r = f.evaluate(p);
        if (!r.known()) return std::nullopt;
        rhs += *r.value;
    }
    return std::make_pair(*lhs.value, rhs);
}

}  // namespace

TEST_CASE("reduce_identity examples") {
    // 5x = 4 + 3x
    PropagationStep s = reduce_identity(fn({{PrimePower(3, 1), q(3)}, {PrimePower(5, 1), q(5)}}), identity_for({1, 3, 6}));
    CHECK(s.kind == StepKind::solved);
    CHECK(s.solved_atom == PrimePower(2, 1));
    CHECK(s.value == q(2));

    PartialMultFn spurious = fn({{PrimePower(2, 1), q(-2)},
                                 {PrimePower(3, 1), q(-1)},
                                 {PrimePower(5, 1), q(1)},
                                 {PrimePower(3, 2), q(5)}});
    PropagationStep c = reduce_identity(spurious, identity_for({1, 1, 1, 15}));
    CHECK(c.kind == StepKind::contradiction);
    CHECK(c.identity.total == 18);
    CHECK(c.lhs == q(-10));
    CHECK(c.rhs == q(2));

    PropagationStep first = reduce_identity(PartialMultFn(), identity_for({1, 1, 1}));
    CHECK(first.kind == StepKind::solved);
    CHECK(first.solved_atom == PrimePower(3, 1));
    CHECK(first.value == q(3));

    // Two unknowns carry no information.
    CHECK(reduce_identity(PartialMultFn(), identity_for({1, 3, 6})).kind == StepKind::tautology);
}

TEST_CASE("reduce_identity cancellation cases") {
    // f(2) = 0 makes f(10) = 0 * f(5) and 1 + f(3) + f(6) = 1 + 0 * ... .
    PartialMultFn z = fn({{PrimePower(2, 1), q(0)}, {PrimePower(3, 1), q(-1)}});
    PropagationStep s = reduce_identity(z, identity_for({1, 3, 6}));
    CHECK(s.kind == StepKind::tautology);  // 0*x = 1 - 1 + 0

    PartialMultFn z2 = fn({{PrimePower(2, 1), q(0)}, {PrimePower(3, 1), q(3)}});
    PropagationStep c = reduce_identity(z2, identity_for({1, 3, 6}));
    CHECK(c.kind == StepKind::contradiction);  // 0*x = 4
    CHECK(c.lhs == q(0));
    CHECK(c.rhs == q(4));
}

TEST_CASE("reduce_identity is sound on random partial functions") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> num(-6, 6), den(1, 3);
    auto ids = generate_identities(4, 120);
    auto atoms = PartialMultFn::identity_up_to(120).assignments();
    std::bernoulli_distribution keep(0.8);
    std::size_t solved = 0, contradicted = 0;
    for (int trial = 0; trial < 60; ++trial) {
        PartialMultFn f;
        for (const auto& [a, v] : atoms) {
            if (keep(rng)) f.set(a, q(num(rng), den(rng)));
        }
        for (const Identity& id : ids) {
            PropagationStep st = reduce_identity(f, id);
            if (st.kind == StepKind::solved) {
                ++solved;
                auto s = sides(assign(f, *st.solved_atom, *st.value), id);
                REQUIRE(s);
                REQUIRE(s->first == s->second);
            } else if (st.kind == StepKind::contradiction) {
                ++contradicted;
                REQUIRE(st.lhs);
                REQUIRE(st.rhs);
                REQUIRE(*st.lhs != *st.rhs);
                if (auto s = sides(f, id)) REQUIRE(s->first != s->second);
            }
        }
    }
    CHECK(solved > 0);
    CHECK(contradicted > 0);
}

TEST_CASE("propagate, k = 3 from scratch") {
    PropagationResult r = propagate(PartialMultFn(), generate_identities(3, 30));
    CHECK(r.verdict == PropagationVerdict::fixpoint);
    REQUIRE(r.steps.size() >= 4);
    CHECK(r.steps[0].solved_atom == PrimePower(3, 1));
    CHECK(r.steps[1].solved_atom == PrimePower(5, 1));
    CHECK(r.steps[2].solved_atom == PrimePower(7, 1));
    CHECK(r.f.value_of(PrimePower(2, 1)) == q(2));
    for (Int n = 1; n <= 10; ++n) CHECK(r.f.evaluate(n).value == Rational(n));
}

TEST_CASE("propagate refutes the spurious k = 4 branch exactly at total 18") {
    PartialMultFn f = seeded({q(-2), q(-1), q(1)});
    PropagationResult upto17 = propagate(f, generate_identities(4, 17));
    CHECK(upto17.verdict == PropagationVerdict::fixpoint);

    PropagationResult upto18 = propagate(f, generate_identities(4, 18));
    REQUIRE(upto18.verdict == PropagationVerdict::contradiction);
    const PropagationStep& last = upto18.steps.back();
    CHECK(last.identity.total == 18);
    CHECK(last.lhs == q(-10));
    CHECK(last.rhs == q(2));
    CHECK(upto18.f.value_of(PrimePower(3, 2)) == q(5));

    PropagationResult streamed = propagate_streaming(f, 4, 17, 1000);
    CHECK(streamed.verdict == PropagationVerdict::fixpoint);
    PropagationResult streamed18 = propagate_streaming(f, 4, 18, 1000);
    CHECK(streamed18.verdict == PropagationVerdict::contradiction);
    CHECK(streamed18.steps.back().identity.total == 18);
}

TEST_CASE("the identity function is a model of every identity") {
    for (int k = 3; k <= 7; ++k) {
        const Int bound = k <= 5 ? 150 : 90;
        PartialMultFn id = PartialMultFn::identity_up_to(bound);
        auto ids = generate_identities(k, bound);
        PropagationResult r = propagate(id, ids);
        CHECK(r.verdict == PropagationVerdict::fixpoint);
        CHECK(r.steps.empty());
        for (const Identity& i : ids) REQUIRE(reduce_identity(id, i).kind == StepKind::tautology);
    }
}

TEST_CASE("streamed and materialized propagation agree") {
    for (int k = 3; k <= 5; ++k) {
        PartialMultFn start = k == 3 ? PartialMultFn() : seeded({q(2), q(3), q(5)});
        PropagationResult a = propagate(start, generate_identities(k, 200));
        PropagationResult b = propagate_streaming(start, k, 200, 1u << 30);
        CHECK(a.verdict == b.verdict);
        CHECK(a.f == b.f);
    }
}

TEST_CASE("seed systems") {
    CHECK(solve_seed_system(4) == std::vector<SeedSolution>{{q(-2), q(-1), q(1)}, {q(2), q(3), q(5)}});
    const std::vector<SeedSolution> three{{q(1, 4), q(2, 3), q(-2)}, {q(1), q(1), q(1)}, {q(2), q(3), q(5)}};
    CHECK(solve_seed_system(5) == three);
    CHECK(solve_seed_system(9) == three);
    for (int k = 5; k <= 40; ++k) REQUIRE(solve_seed_system(k) == three);
    CHECK_THROWS_AS(solve_seed_system(3), std::invalid_argument);

    SeedAnalysis a4 = analyze_seed_system(4);
    CHECK(a4.cubic == poly({-3, -5, -1, 1}));
    CHECK(a4.roots == std::vector<Rational>{q(-1), q(3)});
    SeedAnalysis a5 = analyze_seed_system(5);
    CHECK(a5.cubic == poly({-6, 17, -14, 3}));
}

TEST_CASE("seed cubics factor completely over the rationals") {
    CHECK(poly({1, 1}) * poly({1, 1}) * poly({-3, 1}) == analyze_seed_system(4).cubic);
    CHECK(poly({-1, 1}) * poly({-3, 1}) * poly({-2, 3}) == analyze_seed_system(7).cubic);
}

TEST_CASE("seed solutions satisfy the identities they come from") {
    for (int k : {4, 5, 6, 9}) {
        SeedAnalysis a = analyze_seed_system(k);
        for (const SeedSolution& s : a.solutions) {
            for (const Rational& r : seed_residuals(k, s)) REQUIRE(r.is_zero());
            PartialMultFn f = seeded(s);
            if (k == 4) {
                for (const Identity& id : a.sources) REQUIRE(reduce_identity(f, id).kind == StepKind::tautology);
            } else {
                // Sources come in pairs sharing a total; their right-hand
                // sides must agree.
                for (std::size_t i = 0; i + 1 < a.sources.size(); i += 2) {
                    REQUIRE(a.sources[i].total == a.sources[i + 1].total);
                    Rational lhs, rhs;
                    for (Int p : a.sources[i].parts) lhs += *f.evaluate(p).value;
                    for (Int p : a.sources[i + 1].parts) rhs += *f.evaluate(p).value;
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
    // A non-solution leaves a residual.
    auto res = seed_residuals(5, {q(2), q(3), q(4)});
    CHECK(std::any_of(res.begin(), res.end(), [](const Rational& r) { return !r.is_zero(); }));
}

TEST_CASE("exclusion identities") {
    Identity e5 = exclusion_identity(5);
    CHECK(e5.parts == std::vector<Int>{3, 3, 3, 6, 6});
    CHECK(e5.total == 21);
    Identity e7 = exclusion_identity(7);
    CHECK(e7.parts == std::vector<Int>{3, 3, 3, 3, 3, 3, 15});
    CHECK(e7.total == 33);
    Identity e6 = exclusion_identity(6);
    CHECK(e6.parts == std::vector<Int>{3, 3, 3, 3, 6, 6});
    CHECK(e6.total == 24);
    for (int k = 5; k <= 60; ++k) {
        Identity e = exclusion_identity(k);
        REQUIRE(e.k == k);
        REQUIRE(e.total == ((k + 2) % 3 ? 3 * (k + 2) : 3 * (k + 4)));
    }
    CHECK_THROWS_AS(exclusion_identity(4), std::invalid_argument);
}

TEST_CASE("all-ones refutation witness") {
    Identity w5 = refute_all_ones(5, 100);
    CHECK(w5.total == 10);
    CHECK(w5.parts == std::vector<Int>{1, 1, 1, 1, 6});
    // T_4 = 10 is itself ten 1s.
    Identity w10 = refute_all_ones(10, 100);
    CHECK(w10.total == 10);
    CHECK(w10.parts == std::vector<Int>(10, 1));
    CHECK_THROWS_AS(refute_all_ones(5, 2), SearchExhausted);

    // Brute force over s: the witness total is the least representable T_s.
    for (int k = 5; k <= 30; ++k) {
        Identity w = refute_all_ones(k, 1000);
        Int s = 1;
        while (enumerate_k_representations(triangular(s), k).empty()) ++s;
        REQUIRE(w.total == triangular(s));
        REQUIRE(w.total <= std::max<Int>(triangular(s), k + 4));
    }
}

TEST_CASE("coprime cover") {
    CHECK(coprime_cover(8, 5) == 9);
    CHECK(coprime_cover(2 * 3 * 5 * 7, 5) == 11);
    CHECK(coprime_cover(9, 4) == 8);
    CHECK_THROWS_AS(coprime_cover(1, 5), std::invalid_argument);
    for (Int n = 2; n <= 500; ++n) {
        for (int k = 3; k <= 8; ++k) {
            Int m = coprime_cover(n, k);
            REQUIRE(m > k + 3);
            REQUIRE(gcd(m, n) == 1);
            for (Int x = k + 4; x < m; ++x) REQUIRE(gcd(x, n) != 1);
        }
    }
}

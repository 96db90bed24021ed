#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "addunique/multfunc.hpp"
#include "addunique/serialize.hpp"

using namespace addunique;

namespace {

PartialMultFn fn(std::initializer_list<std::pair<PrimePower, std::int64_t>> atoms) {
    PartialMultFn f;
    for (const auto& [a, v] : atoms) f.set(a, Rational(v));
    return f;
}

// Random values on every atom up to `bound`.
PartialMultFn random_fn(std::mt19937_64& rng, Int bound) {
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 5);
    PartialMultFn f;
    const PartialMultFn atoms = PartialMultFn::identity_up_to(bound);
    for (const auto& [atom, v] : atoms.assignments()) {
        f.set(atom, Rational(BigInt(num(rng)), BigInt(den(rng))));
    }
    return f;
}

}  // namespace

TEST_CASE("evaluate splits along the factorization") {
    auto f = fn({{PrimePower(2, 1), 2}, {PrimePower(5, 1), 5}});
    CHECK(f.evaluate(10).value == Rational(10));
    CHECK(f.evaluate(1).value == Rational(1));
    CHECK(PartialMultFn().evaluate(1).value == Rational(1));

    auto g = fn({{PrimePower(2, 1), 2}});
    EvalResult r = g.evaluate(10);
    CHECK_FALSE(r.known());
    CHECK(r.missing == std::vector<PrimePower>{PrimePower(5, 1)});
    // 4 is the atom 2^2, not 2 * 2.
    CHECK(g.evaluate(4).missing == std::vector<PrimePower>{PrimePower(2, 2)});
}

TEST_CASE("assign is idempotent and detects conflicts") {
    PartialMultFn f = assign(PartialMultFn(), PrimePower(3, 1), Rational(3));
    CHECK(f.value_of(PrimePower(3, 1)) == Rational(3));
    CHECK(assign(f, PrimePower(3, 1), Rational(3)) == f);
    try {
        assign(f, PrimePower(3, 1), Rational(-1));
        FAIL("expected a conflict");
    } catch (const Conflict& c) {
        CHECK(c.atom() == PrimePower(3, 1));
        CHECK(c.existing() == Rational(3));
        CHECK(c.attempted() == Rational(-1));
    }
    // The original value is untouched by value-semantics assignment.
    PartialMultFn g = assign(f, PrimePower(2, 1), Rational(2));
    CHECK(f.size() == 1);
    CHECK(g.size() == 2);
}

TEST_CASE("identity checks") {
    CHECK(is_identity_up_to(PartialMultFn::identity_up_to(100), 100).holds);

    IdentityCheck c = is_identity_up_to(fn({{PrimePower(2, 1), 2}}), 3);
    CHECK_FALSE(c.holds);
    CHECK(c.witness == 3);
    CHECK_FALSE(c.status.known());

    auto spurious = fn({{PrimePower(2, 1), -2}, {PrimePower(3, 1), -1}, {PrimePower(5, 1), 1}});
    IdentityCheck s = is_identity_up_to(spurious, 5);
    CHECK_FALSE(s.holds);
    CHECK(s.witness == 2);
    CHECK(s.status.value == Rational(-2));
}

TEST_CASE("multiplicativity on coprime pairs") {
    std::mt19937_64 rng(99);
    PartialMultFn f = random_fn(rng, 400);
    std::uniform_int_distribution<Int> pick(1, 400);
    for (int i = 0; i < 3000; ++i) {
        Int a = pick(rng), b = pick(rng);
        if (gcd(a, b) != 1 || a * b > 400) continue;
        REQUIRE(f.evaluate(a * b).value == *f.evaluate(a).value * *f.evaluate(b).value);
    }
}

TEST_CASE("assignment is monotone") {
    std::mt19937_64 rng(5);
    PartialMultFn full = random_fn(rng, 200);
    PartialMultFn partial;
    std::vector<std::optional<Rational>> before(201);
    for (const auto& [atom, v] : full.assignments()) {
        for (Int n = 1; n <= 200; ++n) before[static_cast<std::size_t>(n)] = partial.evaluate(n).value;
        partial.set(atom, v);
        for (Int n = 1; n <= 200; ++n) {
            if (before[static_cast<std::size_t>(n)]) REQUIRE(partial.evaluate(n).value == before[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("identity assignment evaluates to n wherever known") {
    PartialMultFn f = PartialMultFn::identity_up_to(50);
    for (Int n = 1; n <= 5000; ++n) {
        EvalResult r = f.evaluate(n);
        if (r.known()) REQUIRE(*r.value == Rational(n));
    }
}

TEST_CASE("JSON schema and round trip") {
    auto f = fn({{PrimePower(2, 1), 2}, {PrimePower(3, 2), -9}});
    f.set(PrimePower(5, 1), Rational(BigInt(1), BigInt(4)));
    Json j = to_json(f);
    CHECK(j.dump() ==
          R"({"atoms":[{"p":2,"e":1,"num":"2","den":"1"},{"p":3,"e":2,"num":"-9","den":"1"},{"p":5,"e":1,"num":"1","den":"4"}]})");

    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        PartialMultFn g = random_fn(rng, 60);
        REQUIRE(multfn_from_json(to_json(g)) == g);
    }
    // Arbitrary precision survives as decimal strings.
    PartialMultFn big;
    big.set(PrimePower(7, 1), Rational::parse("123456789012345678901234567890/7"));
    CHECK(multfn_from_json(to_json(big)) == big);

    CHECK_THROWS_AS(multfn_from_json(Json::parse(R"({"atoms":[{"p":4,"e":1,"num":"1","den":"1"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(multfn_from_json(Json::parse(R"({"nope":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(multfn_from_json(Json::parse(
                        R"({"atoms":[{"p":2,"e":1,"num":"1","den":"1"},{"p":2,"e":1,"num":"2","den":"1"}]})")),
                    Conflict);
}

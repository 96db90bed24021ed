#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "addunique/errors.hpp"
#include "addunique/triangular.hpp"
#include "oracles.hpp"

using namespace addunique;

namespace {

std::vector<std::vector<Int>> parts_of(const std::vector<Representation>& reps) {
    std::vector<std::vector<Int>> out;
    for (const auto& r : reps) out.push_back(r.parts);
    return out;
}

std::set<Int> lemma_set(int k) {
    std::set<Int> s;
    for (Int m = 1; m < k; ++m) s.insert(m);
    s.insert(k + 1);
    s.insert(k + 3);
    return s;
}

}  // namespace

TEST_CASE("triangular values") {
    CHECK(triangular(0) == 0);
    CHECK(triangular(1) == 1);
    CHECK(triangular(6) == 21);
    CHECK_THROWS_AS(triangular(-1), std::invalid_argument);
    const std::vector<Int> listed{1, 3, 6, 10, 15, 21, 28, 36, 45, 55};
    for (std::size_t i = 0; i < listed.size(); ++i) CHECK(triangular(static_cast<Int>(i) + 1) == listed[i]);
}

TEST_CASE("positive triangular predicate") {
    CHECK(is_positive_triangular(55));
    CHECK_FALSE(is_positive_triangular(2));
    CHECK_FALSE(is_positive_triangular(0));
    CHECK_FALSE(is_positive_triangular(-3));
    for (Int m = -5; m <= 5000; ++m) {
        REQUIRE(is_positive_triangular(m) == (m >= 1 && oracle::is_triangular(m)));
    }
}

TEST_CASE("enumeration examples") {
    CHECK(parts_of(enumerate_k_representations(10, 3)) == std::vector<std::vector<Int>>{{1, 3, 6}});
    CHECK(enumerate_k_representations(7, 4).empty());
    CHECK(parts_of(enumerate_k_representations(5, 5)) == std::vector<std::vector<Int>>{{1, 1, 1, 1, 1}});
    CHECK_THROWS_AS(enumerate_k_representations(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_k_representations(5, 0), std::invalid_argument);
}

TEST_CASE("enumeration agrees exactly with brute force for small m") {
    for (int k = 1; k <= 6; ++k) {
        for (Int m = 1; m <= 120; ++m) {
            auto got = parts_of(enumerate_k_representations(m, k));
            REQUIRE_MESSAGE(got == oracle::representations(m, k), "m=" << m << " k=" << k);
        }
    }
}

TEST_CASE("enumeration fingerprint matches brute force for m <= 2000, k <= 6") {
    constexpr Int kMax = 2000;
    for (int k = 1; k <= 6; ++k) {
        std::vector<std::uint64_t> count(kMax + 1, 0), hash(kMax + 1, 0);
        oracle::all_multisets(k, kMax, [&](const std::vector<std::int64_t>& t, std::int64_t s) {
            ++count[static_cast<std::size_t>(s)];
            hash[static_cast<std::size_t>(s)] += oracle::tuple_hash(t);
        });
        for (Int m = 1; m <= kMax; ++m) {
            std::uint64_t c = 0, h = 0;
            std::vector<Int> prev;
            bool ordered = true;
            for_each_k_representation(m, k, [&](const std::vector<Int>& parts) {
                ++c;
                h += oracle::tuple_hash(parts);
                if (!prev.empty() && !(prev < parts)) ordered = false;
                if (!std::is_sorted(parts.begin(), parts.end())) ordered = false;
                prev = parts;
                return true;
            });
            REQUIRE_MESSAGE(c == count[static_cast<std::size_t>(m)], "m=" << m << " k=" << k);
            REQUIRE_MESSAGE(h == hash[static_cast<std::size_t>(m)], "m=" << m << " k=" << k);
            REQUIRE(ordered);
        }
    }
}

TEST_CASE("exceptional set examples") {
    CHECK(exceptional_set(4, 100) == std::set<Int>{1, 2, 3, 5, 7});
    CHECK(exceptional_set(5, 100) == std::set<Int>{1, 2, 3, 4, 6, 8});
    CHECK(exceptional_set(10, 200) == std::set<Int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13});
    CHECK_THROWS_AS(exceptional_set(3, 100), std::invalid_argument);
    CHECK_THROWS_AS(exceptional_set(4, 13), std::invalid_argument);
}

TEST_CASE("exceptional set matches the lemma for k in [4, 10] up to 1e5") {
    for (int k = 4; k <= 10; ++k) CHECK(exceptional_set(k, 100000) == lemma_set(k));
}

TEST_CASE("the DP agrees with enumeration") {
    for (int k = 1; k <= 6; ++k) {
        std::set<Int> missing = unrepresentable_up_to(k, 300);
        for (Int m = 1; m <= 300; ++m) {
            REQUIRE(missing.count(m) == (first_k_representation(m, k) ? 0u : 1u));
        }
    }
    // Three positive parts miss infinitely many values; the small ones:
    auto three = unrepresentable_up_to(3, 30);
    CHECK(std::set<Int>(three.begin(), std::next(three.begin(), 5)) == std::set<Int>{1, 2, 4, 6, 11});
}

TEST_CASE("gauss decomposition examples") {
    CHECK(gauss_three_decomposition(21) == std::array<Int, 3>{0, 0, 21});
    CHECK(gauss_three_decomposition(5) == std::array<Int, 3>{1, 1, 3});
    CHECK(gauss_three_decomposition(1) == std::array<Int, 3>{0, 0, 1});
    CHECK_THROWS_AS(gauss_three_decomposition(0), std::invalid_argument);
}

TEST_CASE("gauss decomposition is the least triple for small n") {
    for (Int n = 1; n <= 400; ++n) {
        // Brute force over all non-decreasing triples, zeros allowed.
        auto tri = oracle::triangulars_up_to(n);
        tri.insert(tri.begin(), 0);
        std::array<Int, 3> best{-1, -1, -1};
        for (std::size_t i = 0; i < tri.size() && best[0] < 0; ++i)
            for (std::size_t j = i; j < tri.size() && best[0] < 0; ++j)
                for (std::size_t l = j; l < tri.size(); ++l)
                    if (tri[i] + tri[j] + tri[l] == n) {
                        best = {tri[i], tri[j], tri[l]};
                        break;
                    }
        REQUIRE(gauss_three_decomposition(n) == best);
    }
}

TEST_CASE("gauss decomposition succeeds up to 1e5") {
    for (Int n = 1; n <= 100000; ++n) {
        auto t = gauss_three_decomposition(n);
        REQUIRE(t[0] + t[1] + t[2] == n);
        REQUIRE(t[0] <= t[1]);
        REQUIRE(t[1] <= t[2]);
        for (Int v : t) REQUIRE(triangular_index(v).has_value());
    }
}

TEST_CASE("four-part decompositions") {
    CHECK(four_positive_decomposition(18).parts == std::vector<Int>{1, 1, 1, 15});
    CHECK(four_positive_decomposition(8).parts == std::vector<Int>{1, 1, 3, 3});
    CHECK(four_positive_decomposition(22).parts == std::vector<Int>{1, 1, 10, 10});
    CHECK_THROWS_AS(four_positive_decomposition(7), std::invalid_argument);
    for (Int m = 8; m <= 3000; ++m) {
        REQUIRE(four_positive_decomposition(m).parts == oracle::representations(m, 4).front());
    }
}

TEST_CASE("star decompositions") {
    CHECK(star_decomposition(4) == std::array<Int, 4>{1, 2, 2, 2});
    CHECK(star_decomposition(6) == std::array<Int, 4>{2, 3, 3, 3});
    CHECK_THROWS_AS(star_decomposition(3), std::invalid_argument);
    for (Int s = 4; s <= 1000; ++s) {
        auto idx = star_decomposition(s);
        Int sum = 0;
        for (Int i : idx) {
            REQUIRE(i >= 1);
            REQUIRE(i < s);
            sum += triangular(i);
        }
        REQUIRE(sum == triangular(s));
    }
}

#include "addunique/triangular.hpp"

#include <boost/dynamic_bitset.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "addunique/errors.hpp"

namespace addunique {

Int triangular(Int n) {
    if (n < 0) {
        throw std::invalid_argument("triangular: negative index " + std::to_string(n));
    }
    return n * (n + 1) / 2;
}

namespace {

Int isqrt(Int x) {
    auto r = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Depth-first search over non-decreasing parts starting at index `from`.
bool descend(Int remaining, int slots, Int from, std::vector<Int>& prefix,
             const std::function<bool(const std::vector<Int>&)>& visit) {
    if (slots == 1) {
        auto idx = triangular_index(remaining);
        if (idx && *idx >= from) {
            prefix.push_back(remaining);
            bool more = visit(prefix);
            prefix.pop_back();
            return more;
        }
        return true;
    }
    for (Int i = from;; ++i) {
        Int t = triangular(i);
        if (t * slots > remaining) break;
        prefix.push_back(t);
        bool more = descend(remaining - t, slots - 1, i, prefix, visit);
        prefix.pop_back();
        if (!more) return false;
    }
    return true;
}

}  // namespace

std::optional<Int> triangular_index(Int m) {
    if (m < 0) return std::nullopt;
    Int d = 8 * m + 1;
    Int r = isqrt(d);
    if (r * r != d) return std::nullopt;
    return (r - 1) / 2;
}

bool is_positive_triangular(Int m) { return m >= 1 && triangular_index(m).has_value(); }

void for_each_k_representation(Int m, int k,
                               const std::function<bool(const std::vector<Int>&)>& visit) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("for_each_k_representation: need m >= 1 and k >= 1");
    }
    std::vector<Int> prefix;
    prefix.reserve(static_cast<std::size_t>(k));
    descend(m, k, 1, prefix, visit);
}

std::vector<Representation> enumerate_k_representations(Int m, int k) {
    std::vector<Representation> out;
    for_each_k_representation(m, k, [&](const std::vector<Int>& parts) {
        out.push_back(Representation{parts, m});
        return true;
    });
    return out;
}

std::optional<Representation> first_k_representation(Int m, int k) {
    std::optional<Representation> out;
    for_each_k_representation(m, k, [&](const std::vector<Int>& parts) {
        out = Representation{parts, m};
        return false;
    });
    return out;
}

std::set<Int> unrepresentable_up_to(int k, Int bound) {
    if (k < 1 || bound < 1) {
        throw std::invalid_argument("unrepresentable_up_to: need k >= 1 and bound >= 1");
    }
    const auto size = static_cast<std::size_t>(bound + 1);
    boost::dynamic_bitset<> tri(size);
    for (Int i = 1; triangular(i) <= bound; ++i) tri.set(static_cast<std::size_t>(triangular(i)));

    // reach holds the sums of exactly j positive triangulars.
    boost::dynamic_bitset<> reach(size);
    reach.set(0);
    for (int j = 0; j < k; ++j) {
        boost::dynamic_bitset<> next(size);
        for (Int i = 1; triangular(i) <= bound; ++i) {
            next |= reach << static_cast<std::size_t>(triangular(i));
        }
        reach = std::move(next);
    }
    std::set<Int> missing;
    for (Int m = 1; m <= bound; ++m) {
        if (!reach.test(static_cast<std::size_t>(m))) missing.insert(m);
    }
    return missing;
}

std::set<Int> exceptional_set(int k, Int bound) {
    if (k < 4) throw std::invalid_argument("exceptional_set: requires k >= 4");
    if (bound < k + 10) throw std::invalid_argument("exceptional_set: requires bound >= k + 10");

    std::set<Int> expected;
    for (Int m = 1; m < k; ++m) expected.insert(m);
    expected.insert(k + 1);
    expected.insert(k + 3);

    std::set<Int> computed = unrepresentable_up_to(k, bound);
    if (computed != expected) {
        // Least element of the symmetric difference.
        Int worst = bound + 1;
        for (Int m : computed) {
            if (!expected.count(m)) worst = std::min(worst, m);
        }
        for (Int m : expected) {
            if (!computed.count(m)) worst = std::min(worst, m);
        }
        throw LemmaViolation(worst, "exceptional set for k=" + std::to_string(k) +
                                        " deviates at m=" + std::to_string(worst));
    }
    return computed;
}

std::array<Int, 3> gauss_three_decomposition(Int n) {
    if (n < 1) throw std::invalid_argument("gauss_three_decomposition: requires n >= 1");
    for (Int i = 0; 3 * triangular(i) <= n; ++i) {
        Int a = triangular(i);
        for (Int j = i; a + 2 * triangular(j) <= n; ++j) {
            Int b = triangular(j);
            Int c = n - a - b;
            if (triangular_index(c)) return {a, b, c};
        }
    }
    throw GaussViolation(n);
}

Representation four_positive_decomposition(Int m) {
    if (m < 8) throw std::invalid_argument("four_positive_decomposition: requires m >= 8");
    auto rep = first_k_representation(m, 4);
    if (!rep) {
        throw LemmaViolation(m, std::to_string(m) + " is not a sum of four positive triangulars");
    }
    return *rep;
}

std::array<Int, 4> star_decomposition(Int s) {
    if (s < 4) throw std::invalid_argument("star_decomposition: requires s >= 4");
    Representation rep = four_positive_decomposition(triangular(s));
    std::array<Int, 4> idx{};
    for (std::size_t i = 0; i < 4; ++i) idx[i] = *triangular_index(rep.parts[i]);
    return idx;
}

}  // namespace addunique

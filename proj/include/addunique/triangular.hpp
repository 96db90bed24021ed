#ifndef ADDUNIQUE_TRIANGULAR_HPP
#define ADDUNIQUE_TRIANGULAR_HPP

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "addunique/arith.hpp"

namespace addunique {

/// T_n = n(n+1)/2. Throws std::invalid_argument for n < 0.
Int triangular(Int n);

/// The index n with T_n = m, if m >= 0 is triangular.
std::optional<Int> triangular_index(Int m);

bool is_positive_triangular(Int m);

/// A multiset of positive triangular numbers, stored non-decreasing.
struct Representation {
    std::vector<Int> parts;
    Int total = 0;

    friend auto operator<=>(const Representation&, const Representation&) = default;
};

/// Visits the non-decreasing k-tuples of positive triangulars summing to m
/// in lexicographic order until the visitor returns false.
void for_each_k_representation(Int m, int k,
                               const std::function<bool(const std::vector<Int>&)>& visit);

/// Complete, lexicographically sorted list; empty when m is not a sum of
/// k positive triangulars.
std::vector<Representation> enumerate_k_representations(Int m, int k);

/// First representation in lexicographic order, if any.
std::optional<Representation> first_k_representation(Int m, int k);

/// {m <= bound : m not a sum of k positive triangulars}, via forward DP.
/// Requires k >= 4 and bound >= k + 10; throws LemmaViolation if the set is
/// not {1, ..., k-1, k+1, k+3}.
std::set<Int> exceptional_set(int k, Int bound);

/// Raw DP result without the lemma check (k >= 1).
std::set<Int> unrepresentable_up_to(int k, Int bound);

/// Lexicographically smallest non-decreasing (a, b, c) of triangulars
/// (zeros allowed) with a + b + c = n.
std::array<Int, 3> gauss_three_decomposition(Int n);

/// First 4-part representation of m >= 8.
Representation four_positive_decomposition(Int m);

/// Indices (a, b, c, d) with T_a + T_b + T_c + T_d = T_s, taken from
/// four_positive_decomposition(T_s). Requires s >= 4.
std::array<Int, 4> star_decomposition(Int s);

}  // namespace addunique

#endif  // ADDUNIQUE_TRIANGULAR_HPP

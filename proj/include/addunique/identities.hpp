#ifndef ADDUNIQUE_IDENTITIES_HPP
#define ADDUNIQUE_IDENTITIES_HPP

#include <compare>
#include <string>
#include <vector>

#include "addunique/arith.hpp"

namespace addunique {

/// One constraint f(x_1 + ... + x_k) = f(x_1) + ... + f(x_k) over positive
/// triangular parts, stored as a non-decreasing multiset.
struct Identity {
    int k = 0;
    std::vector<Int> parts;
    Int total = 0;

    std::string str() const;

    // Orders by (total, parts), the propagation scan order.
    friend std::strong_ordering operator<=>(const Identity& a, const Identity& b) {
        if (auto c = a.total <=> b.total; c != 0) return c;
        return a.parts <=> b.parts;
    }
    friend bool operator==(const Identity&, const Identity&) = default;
};

/// Canonicalizes arbitrary-order parts. Throws std::invalid_argument when a
/// part is not a positive triangular number or the list is empty.
Identity identity_for(std::vector<Int> parts);

/// Every canonical k-part identity with total <= total_bound, sorted by
/// (total, parts). Requires k >= 3 and total_bound >= k.
std::vector<Identity> generate_identities(int k, Int total_bound);

}  // namespace addunique

#endif  // ADDUNIQUE_IDENTITIES_HPP

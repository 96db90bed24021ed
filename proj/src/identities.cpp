#include "addunique/identities.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "addunique/triangular.hpp"

namespace addunique {

std::string Identity::str() const {
    std::string s = "f(" + std::to_string(total) + ") = ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " + ";
        s += "f(" + std::to_string(parts[i]) + ")";
    }
    return s;
}

Identity identity_for(std::vector<Int> parts) {
    if (parts.empty()) throw std::invalid_argument("identity_for: no parts");
    for (Int p : parts) {
        if (!is_positive_triangular(p)) {
            throw std::invalid_argument("identity_for: " + std::to_string(p) +
                                        " is not a positive triangular number");
        }
    }
    std::sort(parts.begin(), parts.end());
    Identity id;
    id.k = static_cast<int>(parts.size());
    id.total = std::accumulate(parts.begin(), parts.end(), Int{0});
    id.parts = std::move(parts);
    return id;
}

std::vector<Identity> generate_identities(int k, Int total_bound) {
    if (k < 3) throw std::invalid_argument("generate_identities: requires k >= 3");
    if (total_bound < k) throw std::invalid_argument("generate_identities: requires total_bound >= k");
    std::vector<Identity> out;
    for (Int m = k; m <= total_bound; ++m) {
        for_each_k_representation(m, k, [&](const std::vector<Int>& parts) {
            out.push_back(Identity{k, parts, m});
            return true;
        });
    }
    return out;
}

}  // namespace addunique

#include "addunique/multfunc.hpp"

namespace addunique {

Conflict::Conflict(PrimePower atom, Rational existing, Rational attempted)
    : std::runtime_error("conflicting values for f(" + atom.str() + "): " + existing.str() +
                         " vs " + attempted.str()),
      atom_(atom),
      existing_(std::move(existing)),
      attempted_(std::move(attempted)) {}

PartialMultFn PartialMultFn::identity_up_to(Int bound) {
    Map m;
    for (Int p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        Int q = p;
        for (int e = 1;; ++e) {
            m.emplace(PrimePower(p, e), Rational(q));
            if (q > bound / p) break;
            q *= p;
        }
    }
    return PartialMultFn(std::move(m));
}

EvalResult PartialMultFn::evaluate(Int n) const { return evaluate(factorize(n)); }

EvalResult PartialMultFn::evaluate(const Factorization& atoms) const {
    Rational acc(1);
    std::vector<PrimePower> missing;
    for (const PrimePower& a : atoms) {
        auto it = atoms_.find(a);
        if (it == atoms_.end()) {
            missing.push_back(a);
        } else if (missing.empty()) {
            acc *= it->second;
        }
    }
    if (!missing.empty()) return EvalResult::Unknown(std::move(missing));
    return EvalResult::Known(std::move(acc));
}

std::optional<Rational> PartialMultFn::value_of(const PrimePower& atom) const {
    auto it = atoms_.find(atom);
    if (it == atoms_.end()) return std::nullopt;
    return it->second;
}

bool PartialMultFn::set(const PrimePower& atom, const Rational& v) {
    auto [it, inserted] = atoms_.emplace(atom, v);
    if (!inserted && it->second != v) {
        throw Conflict(atom, it->second, v);
    }
    return inserted;
}

PartialMultFn assign(const PartialMultFn& f, const PrimePower& atom, const Rational& v) {
    PartialMultFn out = f;
    out.set(atom, v);
    return out;
}

IdentityCheck is_identity_up_to(const PartialMultFn& f, Int bound) {
    for (Int n = 1; n <= bound; ++n) {
        EvalResult r = f.evaluate(n);
        if (!r.known() || *r.value != Rational(n)) {
            return IdentityCheck{false, n, std::move(r)};
        }
    }
    return IdentityCheck{};
}

}  // namespace addunique

#ifndef ADDUNIQUE_MULTFUNC_HPP
#define ADDUNIQUE_MULTFUNC_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "addunique/arith.hpp"
#include "addunique/rational.hpp"

namespace addunique {

/// Reassigning an atom to a different value.
class Conflict : public std::runtime_error {
public:
    Conflict(PrimePower atom, Rational existing, Rational attempted);
    const PrimePower& atom() const { return atom_; }
    const Rational& existing() const { return existing_; }
    const Rational& attempted() const { return attempted_; }

private:
    PrimePower atom_;
    Rational existing_;
    Rational attempted_;
};

/// Known(value) when every atom is assigned, otherwise Unknown(missing).
struct EvalResult {
    std::optional<Rational> value;
    std::vector<PrimePower> missing;

    bool known() const { return value.has_value(); }
    static EvalResult Known(Rational v) { return {std::move(v), {}}; }
    static EvalResult Unknown(std::vector<PrimePower> atoms) { return {std::nullopt, std::move(atoms)}; }
};

/// A multiplicative function known on a finite set of prime-power atoms.
/// f(1) = 1 is implicit.
class PartialMultFn {
public:
    using Map = std::map<PrimePower, Rational>;

    PartialMultFn() = default;
    explicit PartialMultFn(Map assignments) : atoms_(std::move(assignments)) {}

    /// The function p^e -> p^e on every atom with p^e <= bound.
    static PartialMultFn identity_up_to(Int bound);

    EvalResult evaluate(Int n) const;
    EvalResult evaluate(const Factorization& atoms) const;

    std::optional<Rational> value_of(const PrimePower& atom) const;
    bool assigned(const PrimePower& atom) const { return atoms_.count(atom) != 0; }

    /// In-place assignment for single-owner state. Returns true when the atom
    /// was new; throws Conflict on a differing value.
    bool set(const PrimePower& atom, const Rational& v);

    const Map& assignments() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    friend bool operator==(const PartialMultFn&, const PartialMultFn&) = default;

private:
    Map atoms_;
};

/// Value-semantics assignment: returns the updated function.
PartialMultFn assign(const PartialMultFn& f, const PrimePower& atom, const Rational& v);

struct IdentityCheck {
    bool holds = true;
    Int witness = 0;  ///< least failing n when !holds
    EvalResult status;
};

/// Whether f(n) = n for every n in [1, bound].
IdentityCheck is_identity_up_to(const PartialMultFn& f, Int bound);

}  // namespace addunique

#endif  // ADDUNIQUE_MULTFUNC_HPP

#include <set>
#include <stdexcept>

#include "addunique/engine.hpp"
#include "addunique/triangular.hpp"

namespace addunique {

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::solved: return "solved";
        case StepKind::contradiction: return "contradiction";
        case StepKind::tautology: return "tautology";
    }
    return "?";
}

namespace {

// Product of the known atoms of one side term, plus the atoms still missing.
struct Term {
    Rational known{1};
    std::vector<PrimePower> missing;
};

Term eval_term(const PartialMultFn& f, const Factorization& fac) {
    Term t;
    for (const PrimePower& a : fac) {
        if (auto v = f.value_of(a)) {
            t.known *= *v;
        } else {
            t.missing.push_back(a);
        }
    }
    return t;
}

// Each factorization holds a given atom at most once, so with a single
// unknown x the identity reads a*x + l0 = c*x + r0.
PropagationStep combine(const Identity& id, const Term& lhs, const std::vector<Term>& parts) {
    PropagationStep step;
    step.identity = id;

    std::set<PrimePower> unknown(lhs.missing.begin(), lhs.missing.end());
    for (const Term& t : parts) unknown.insert(t.missing.begin(), t.missing.end());
    if (unknown.size() >= 2) return step;

    Rational a, l0, c, r0;
    (lhs.missing.empty() ? l0 : a) = lhs.known;
    for (const Term& t : parts) {
        (t.missing.empty() ? r0 : c) += t.known;
    }

    if (unknown.empty()) {
        if (l0 != r0) {
            step.kind = StepKind::contradiction;
            step.lhs = l0;
            step.rhs = r0;
        }
        return step;
    }
    if (a != c) {
        step.kind = StepKind::solved;
        step.solved_atom = *unknown.begin();
        step.value = (r0 - l0) / (a - c);
    } else if (l0 != r0) {
        step.kind = StepKind::contradiction;
        step.lhs = l0;
        step.rhs = r0;
    }
    return step;
}

}  // namespace

PropagationStep reduce_identity(const PartialMultFn& f, const Identity& id) {
    Term lhs = eval_term(f, factorize(id.total));
    std::vector<Term> parts;
    parts.reserve(id.parts.size());
    for (Int p : id.parts) parts.push_back(eval_term(f, factorize(p)));
    return combine(id, lhs, parts);
}

PropagationResult propagate(PartialMultFn f, const std::vector<Identity>& ids) {
    PropagationResult out;
    for (bool changed = true; changed;) {
        changed = false;
        ++out.passes;
        for (const Identity& id : ids) {
            PropagationStep step = reduce_identity(f, id);
            if (step.kind == StepKind::solved) {
                f.set(*step.solved_atom, *step.value);
                out.steps.push_back(std::move(step));
                changed = true;
            } else if (step.kind == StepKind::contradiction) {
                out.steps.push_back(std::move(step));
                out.verdict = PropagationVerdict::contradiction;
                out.f = std::move(f);
                return out;
            }
        }
    }
    out.f = std::move(f);
    return out;
}

PropagationResult propagate_streaming(PartialMultFn f, int k, Int identity_bound,
                                      std::size_t checks_per_total) {
    if (k < 1) throw std::invalid_argument("propagate_streaming: requires k >= 1");
    PropagationResult out;
    if (identity_bound < k) {
        out.f = std::move(f);
        return out;
    }

    // Triangular parts indexed by their index s: cached factorization and,
    // once all atoms are pinned, the value. Pins are never undone.
    std::vector<Factorization> tri_fac;
    std::vector<std::optional<Rational>> tri_val;
    auto part_term = [&](Int part) -> Term {
        auto s = static_cast<std::size_t>(*triangular_index(part));
        if (s >= tri_fac.size()) {
            for (std::size_t i = tri_fac.size(); i <= s; ++i) {
                tri_fac.push_back(factorize(triangular(static_cast<Int>(i == 0 ? 1 : i))));
                tri_val.emplace_back();
            }
        }
        if (tri_val[s]) return Term{*tri_val[s], {}};
        Term t = eval_term(f, tri_fac[s]);
        if (t.missing.empty()) tri_val[s] = t.known;
        return t;
    };

    std::vector<char> settled(static_cast<std::size_t>(identity_bound + 1), 0);
    std::vector<Term> parts;
    for (bool changed = true; changed;) {
        changed = false;
        ++out.passes;
        for (Int m = k; m <= identity_bound; ++m) {
            if (settled[static_cast<std::size_t>(m)]) continue;
            const Factorization total_fac = factorize(m);
            Term lhs = eval_term(f, total_fac);
            if (lhs.missing.size() >= 2) continue;

            std::size_t full_checks = 0;
            bool pending = false;
            bool contradicted = false;
            for_each_k_representation(m, k, [&](const std::vector<Int>& rep) {
                parts.clear();
                for (Int p : rep) parts.push_back(part_term(p));
                bool all_known = lhs.missing.empty();
                for (const Term& t : parts) all_known = all_known && t.missing.empty();

                PropagationStep step = combine(Identity{k, rep, m}, lhs, parts);
                switch (step.kind) {
                    case StepKind::solved:
                        f.set(*step.solved_atom, *step.value);
                        out.steps.push_back(std::move(step));
                        changed = true;
                        lhs = eval_term(f, total_fac);
                        break;
                    case StepKind::contradiction:
                        out.steps.push_back(std::move(step));
                        contradicted = true;
                        return false;
                    case StepKind::tautology:
                        if (all_known) {
                            ++full_checks;
                        } else {
                            pending = true;
                        }
                        break;
                }
                return !(lhs.missing.empty() && full_checks >= checks_per_total);
            });
            if (contradicted) {
                out.verdict = PropagationVerdict::contradiction;
                out.f = std::move(f);
                return out;
            }
            if (!pending && lhs.missing.empty()) settled[static_cast<std::size_t>(m)] = 1;
        }
    }
    out.f = std::move(f);
    return out;
}

}  // namespace addunique

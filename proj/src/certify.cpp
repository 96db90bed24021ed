#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "addunique/engine.hpp"
#include "addunique/errors.hpp"
#include "addunique/triangular.hpp"

namespace addunique {

std::string to_string(Strategy s) { return s == Strategy::directed ? "directed" : "generic"; }

std::string to_string(BranchStatus s) {
    switch (s) {
        case BranchStatus::refuted: return "refuted";
        case BranchStatus::certified: return "certified";
        case BranchStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::unique: return "unique";
        case Verdict::failure: return "failure";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

const BranchOutcome* CertificationReport::certified() const {
    const BranchOutcome* found = nullptr;
    for (const BranchOutcome& b : branches) {
        if (b.status != BranchStatus::certified) continue;
        if (found) return nullptr;
        found = &b;
    }
    return found;
}

Identity exclusion_identity(int k) {
    if (k < 5) throw std::invalid_argument("exclusion_identity: requires k >= 5");
    std::vector<Int> parts;
    if ((k + 2) % 3 != 0) {
        parts.assign(static_cast<std::size_t>(k - 2), 3);
        parts.insert(parts.end(), {6, 6});
    } else {
        parts.assign(static_cast<std::size_t>(k - 1), 3);
        parts.push_back(15);
    }
    return identity_for(std::move(parts));
}

Identity refute_all_ones(int k, Int search_bound) {
    if (k < 5) throw std::invalid_argument("refute_all_ones: requires k >= 5");
    for (Int s = 1; s <= search_bound; ++s) {
        if (auto rep = first_k_representation(triangular(s), k)) {
            return Identity{k, rep->parts, rep->total};
        }
    }
    throw SearchExhausted("no triangular T_s with s <= " + std::to_string(search_bound) +
                          " is a sum of " + std::to_string(k) + " positive triangulars");
}

Int coprime_cover(Int n, int k) {
    if (n < 2) throw std::invalid_argument("coprime_cover: requires N >= 2");
    Int m = k + 4;
    while (gcd(m, n) != 1) ++m;
    return m;
}

namespace {

std::vector<Int> ones_then(int ones, std::initializer_list<Int> rest) {
    std::vector<Int> parts(static_cast<std::size_t>(std::max(ones, 0)), 1);
    parts.insert(parts.end(), rest);
    return parts;
}

// Mutable state of one branch; owned by a single worker.
class Branch {
public:
    explicit Branch(std::optional<SeedSolution> seed) { out_.seed = std::move(seed); }

    BranchOutcome& outcome() { return out_; }
    const PartialMultFn& f() const { return out_.assignment; }
    bool open() const { return open_; }

    void seed() {
        const SeedSolution& s = *out_.seed;
        pin_seed(PrimePower(2, 1), s.f2);
        pin_seed(PrimePower(3, 1), s.f3);
        pin_seed(PrimePower(5, 1), s.f5);
    }

    // Applies an identity that must pin `target`.
    bool solve(const Identity& id, const PrimePower& target) {
        PropagationStep step = reduce_identity(out_.assignment, id);
        track(id);
        if (step.kind == StepKind::contradiction) {
            refute("contradiction", id, *step.lhs, *step.rhs, "");
            return false;
        }
        if (step.kind != StepKind::solved || *step.solved_atom != target) {
            stuck(target.value());
            return false;
        }
        out_.assignment.set(target, *step.value);
        record({"identity", target.value(), target, *step.value, {id}, std::nullopt});
        return true;
    }

    // Applies an identity whose sides are expected to be known.
    bool check(const Identity& id) {
        PropagationStep step = reduce_identity(out_.assignment, id);
        track(id);
        if (step.kind == StepKind::contradiction) {
            refute("contradiction", id, *step.lhs, *step.rhs, "");
            return false;
        }
        EvalResult lhs = out_.assignment.evaluate(id.total);
        if (step.kind != StepKind::tautology || !lhs.known()) {
            stuck(id.total);
            return false;
        }
        record({"check", id.total, std::nullopt, *lhs.value, {id}, std::nullopt});
        return true;
    }

    bool split(Int n) {
        EvalResult r = out_.assignment.evaluate(n);
        if (!r.known()) {
            stuck(n);
            return false;
        }
        record({"split", n, std::nullopt, *r.value, {}, std::nullopt});
        return true;
    }

    bool pin(const PrimePower& atom, const Rational& v, CertStep step) {
        try {
            out_.assignment.set(atom, v);
        } catch (const Conflict& c) {
            Identity id = step.identities.empty() ? Identity{} : step.identities.back();
            refute("contradiction", id, c.existing(), c.attempted(),
                   "two derivations of f(" + atom.str() + ") disagree");
            return false;
        }
        record(std::move(step));
        return true;
    }

    void record(CertStep step) { out_.steps.push_back(std::move(step)); }
    void track(const Identity& id) { max_total_ = std::max(max_total_, id.total); }
    Int max_total() const { return max_total_; }

    void refute(std::string rule, Identity id, Rational lhs, Rational rhs, std::string detail) {
        out_.status = BranchStatus::refuted;
        out_.evidence = Evidence{std::move(rule), std::move(id), std::move(lhs), std::move(rhs),
                                 std::move(detail)};
        open_ = false;
    }

    void stuck(Int n) {
        if (!out_.first_stuck) out_.first_stuck = n;
        out_.starved = true;
        open_ = false;
    }

    void finish(Int bound) {
        if (out_.status == BranchStatus::refuted) return;
        IdentityCheck chk = is_identity_up_to(out_.assignment, bound);
        if (chk.holds && !out_.first_stuck) {
            out_.status = BranchStatus::certified;
            return;
        }
        out_.status = BranchStatus::inconclusive;
        if (!chk.holds) {
            if (!out_.first_stuck || chk.witness < *out_.first_stuck) out_.first_stuck = chk.witness;
            if (!chk.status.known()) out_.starved = true;
        }
    }

private:
    void pin_seed(const PrimePower& atom, const Rational& v) {
        out_.assignment.set(atom, v);
        record({"seed", atom.value(), atom, v, {}, std::nullopt});
    }

    BranchOutcome out_;
    bool open_ = true;
    Int max_total_ = 0;
};

// Value of f on T_s, computed without atoms. Entries up to s = 5 come from
// the seeded atoms; beyond that each entry follows from equating the two
// k-part sums (k-5)*1 + 1+1+1+3 + T_s and (k-5)*1 + 6 + T_a+T_b+T_c+T_d.
class TriangularValues {
public:
    TriangularValues(Branch& branch, int k) : branch_(branch), k_(k) { values_.emplace_back(0); }

    std::optional<Rational> at(Int s) {
        while (static_cast<Int>(values_.size()) <= s) {
            Int next = static_cast<Int>(values_.size());
            auto v = derive(next);
            if (!v) return std::nullopt;
            values_.push_back(*v);
        }
        return values_[static_cast<std::size_t>(s)];
    }

    std::optional<Rational> sum_over(const std::vector<Int>& parts) {
        Rational total;
        for (Int p : parts) {
            auto v = at(*triangular_index(p));
            if (!v) return std::nullopt;
            total += *v;
        }
        return total;
    }

    Int computed() const { return static_cast<Int>(values_.size()) - 1; }
    const Rational& value(Int s) const { return values_[static_cast<std::size_t>(s)]; }

private:
    std::optional<Rational> derive(Int s) {
        if (s <= 5) {
            EvalResult r = branch_.f().evaluate(triangular(s));
            if (!r.known()) return std::nullopt;
            return *r.value;
        }
        auto idx = star_decomposition(s);
        Rational v = values_[3] - Rational(3) * values_[1] - values_[2];
        std::vector<Int> rhs_parts = ones_then(k_ - 5, {6});
        for (Int i : idx) {
            v += values_[static_cast<std::size_t>(i)];
            rhs_parts.push_back(triangular(i));
        }
        Identity lhs_id = identity_for(ones_then(k_ - 2, {3, triangular(s)}));
        Identity rhs_id = identity_for(std::move(rhs_parts));
        branch_.track(lhs_id);
        branch_.record({"star", triangular(s), std::nullopt, v, {lhs_id, rhs_id}, std::nullopt});
        return v;
    }

    Branch& branch_;
    int k_;
    std::vector<Rational> values_;
};

bool exceptional(Int n, int k) { return n < k || n == k + 1 || n == k + 3; }

// ---------------------------------------------------------------------------
// Directed replays
// ---------------------------------------------------------------------------

// Witness for an unpinned prime power N = p^r (k = 3).
Identity witness_k3(const PrimePower& atom) {
    auto t = [](Int s) { return triangular(s); };
    // 3 T_m = 3^r (3^(r-1) + 1)/2 with m = 3^(r-1).
    if (atom.p == 3) {
        Int m = ipow(3, atom.e - 1);
        return identity_for({t(m), t(m), t(m)});
    }
    // For N = 2^r take 3s -+ 1 = 2^(r+1); otherwise 3s -+ 1 = N.
    Int target = atom.p == 2 ? 2 * atom.value() : atom.value();
    if (target % 3 == 2) {
        Int s = (target + 1) / 3;
        return identity_for({t(s - 1), t(s - 1), t(s)});
    }
    Int s = (target - 1) / 3;
    return identity_for({t(s - 1), t(s), t(s)});
}

void directed_k3(Branch& b, Int bound) {
    if (!b.solve(identity_for({1, 1, 1}), PrimePower(3, 1))) return;
    if (!b.solve(identity_for({1, 1, 3}), PrimePower(5, 1))) return;
    if (!b.solve(identity_for({1, 3, 6}), PrimePower(2, 1))) return;
    for (Int n = 2; n <= bound && b.open(); ++n) {
        Factorization fac = factorize(n);
        if (fac.size() > 1) {
            b.split(n);
        } else if (!b.f().assigned(fac[0])) {
            b.solve(witness_k3(fac[0]), fac[0]);
        }
    }
}

void directed_k4(Branch& b, Int bound) {
    b.seed();
    if (!b.solve(identity_for({1, 1, 1, 1}), PrimePower(2, 2))) return;
    // f(9) = 3 + f(6), then f(18) along 1+1+1+15 against f(2) f(9).
    if (!b.solve(identity_for({1, 1, 1, 6}), PrimePower(3, 2))) return;
    if (!b.check(identity_for({1, 1, 1, 15}))) return;
    // f(14) = 2 + 2 f(6) = f(2) f(7).
    if (!b.solve(identity_for({1, 1, 6, 6}), PrimePower(7, 1))) return;
    for (Int n = 2; n <= bound && b.open(); ++n) {
        Factorization fac = factorize(n);
        if (fac.size() > 1) {
            b.split(n);
        } else if (!b.f().assigned(fac[0])) {
            Representation rep = four_positive_decomposition(n);
            b.solve(Identity{4, rep.parts, rep.total}, fac[0]);
        }
    }
}

void directed_k5plus(Branch& b, int k, Int bound) {
    b.seed();
    TriangularValues tv(b, k);

    // f(m) for m = k+2 or k+4 along (k-1)*1 + 3 or (k-2)*1 + 3 + 3, then
    // f(3m) = f(3) f(m) against the exclusion identity.
    {
        const bool plus_two = (k + 2) % 3 != 0;
        const Int m = plus_two ? k + 2 : k + 4;
        Identity aux = plus_two ? identity_for(ones_then(k - 1, {3})) : identity_for(ones_then(k - 2, {3, 3}));
        Identity ex = exclusion_identity(k);
        b.track(aux);
        b.track(ex);
        Rational fm = *tv.sum_over(aux.parts);
        b.record({"representation", m, std::nullopt, fm, {aux}, std::nullopt});
        Rational f3 = *b.f().value_of(PrimePower(3, 1));
        Rational lhs = f3 * fm;
        Rational rhs = *tv.sum_over(ex.parts);
        if (lhs != rhs) {
            b.refute("exclusion", ex, lhs, rhs,
                     "f(" + std::to_string(ex.total) + ") = f(3) f(" + std::to_string(m) + ")");
            return;
        }
        b.record({"check", ex.total, std::nullopt, lhs, {aux, ex}, std::nullopt});
    }

    // Least T_s that is a k-part sum: its value from the triangular table
    // must equal the sum over its parts.
    {
        Identity w = refute_all_ones(k, std::max<Int>(bound, 2 * k + 10));
        b.track(w);
        Int s = *triangular_index(w.total);
        auto lhs = tv.at(s);
        auto rhs = tv.sum_over(w.parts);
        if (!lhs || !rhs) {
            b.stuck(w.total);
            return;
        }
        if (*lhs != *rhs) {
            b.refute("all_ones", w, *lhs, *rhs,
                     "f(T_" + std::to_string(s) + ") from the triangular table vs its " +
                         std::to_string(k) + "-part sum");
            return;
        }
        b.record({"check", w.total, std::nullopt, *lhs, {w}, std::nullopt});
    }

    for (Int n = 2; n <= bound && b.open(); ++n) {
        Factorization fac = factorize(n);
        if (fac.size() > 1) {
            b.split(n);
            continue;
        }
        const PrimePower atom = fac[0];
        if (b.f().assigned(atom)) continue;
        if (!exceptional(n, k)) {
            auto rep = first_k_representation(n, k);
            if (!rep) throw LemmaViolation(n, std::to_string(n) + " has no " + std::to_string(k) + "-part form");
            Identity id{k, rep->parts, n};
            b.track(id);
            auto v = tv.sum_over(id.parts);
            if (!v) {
                b.stuck(n);
                break;
            }
            b.pin(atom, *v, {"representation", n, atom, *v, {id}, std::nullopt});
            continue;
        }
        const Int m = coprime_cover(n, k);
        auto rep_m = first_k_representation(m, k);
        auto rep_mn = first_k_representation(m * n, k);
        if (!rep_m || !rep_mn) throw LemmaViolation(m, "coprime cover is not a k-part sum");
        Identity id_m{k, rep_m->parts, m};
        Identity id_mn{k, rep_mn->parts, m * n};
        b.track(id_mn);
        auto fm = tv.sum_over(id_m.parts);
        auto fmn = tv.sum_over(id_mn.parts);
        if (!fm || !fmn || fm->is_zero()) {
            b.stuck(n);
            break;
        }
        Rational v = *fmn / *fm;
        b.pin(atom, v, {"coprime", n, atom, v, {id_m, id_mn}, m});
    }
    if (!b.open()) return;

    // Atom-level values must reproduce the triangular table.
    for (Int s = 1; s <= tv.computed() && triangular(s) <= bound; ++s) {
        EvalResult r = b.f().evaluate(triangular(s));
        if (r.known() && *r.value != tv.value(s)) {
            b.refute("contradiction", identity_for({triangular(s)}), *r.value, tv.value(s),
                     "multiplicative value of T_" + std::to_string(s) + " disagrees with the triangular table");
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

void run_branches(std::vector<std::function<void()>>& jobs, unsigned threads) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    if (threads == 1) {
        for (auto& j : jobs) j();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
                try {
                    jobs[i]();
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

void assemble(CertificationReport& report, bool starvation_is_failure) {
    std::size_t certified = 0;
    std::size_t refuted = 0;
    bool wrong_model = false;
    bool starved = false;
    for (const BranchOutcome& b : report.branches) {
        if (b.status == BranchStatus::certified) ++certified;
        if (b.status == BranchStatus::refuted) ++refuted;
        if (b.status == BranchStatus::inconclusive) {
            (b.starved ? starved : wrong_model) = true;
            if (b.first_stuck && (!report.first_stuck || *b.first_stuck < *report.first_stuck)) {
                report.first_stuck = b.first_stuck;
            }
        }
    }
    if (certified == 1 && refuted + 1 == report.branches.size()) {
        report.verdict = Verdict::unique;
    } else if (wrong_model || starvation_is_failure || !starved) {
        report.verdict = Verdict::failure;
    } else {
        report.verdict = Verdict::inconclusive;
    }

    // Per-n table from the certified branch, else the first surviving one.
    const BranchOutcome* source = nullptr;
    for (const BranchOutcome& b : report.branches) {
        if (b.status == BranchStatus::certified) source = &b;
    }
    for (const BranchOutcome& b : report.branches) {
        if (!source && b.status != BranchStatus::refuted) source = &b;
    }
    if (!source) return;

    std::map<Int, std::size_t> first_step;
    for (std::size_t i = 0; i < source->steps.size(); ++i) {
        const CertStep& st = source->steps[i];
        if (st.n <= report.bound && st.rule != "check") first_step.emplace(st.n, i);
    }
    report.table.reserve(static_cast<std::size_t>(report.bound));
    for (Int n = 1; n <= report.bound; ++n) {
        NStatus row;
        row.n = n;
        EvalResult r = source->assignment.evaluate(n);
        if (!r.known()) {
            row.status = "unknown";
        } else {
            row.value = *r.value;
            row.status = *r.value == Rational(n) ? "identity" : "mismatch";
        }
        if (auto it = first_step.find(n); it != first_step.end()) row.via = it->second;
        report.table.push_back(std::move(row));
    }
}

void check_k(int k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3, got " + std::to_string(k));
}

}  // namespace

CertificationReport directed_certify(int k, Int bound, const CertifyOptions& opts) {
    check_k(k);
    if (bound < 25) throw std::invalid_argument("directed_certify: requires bound >= 25");
    const auto start = std::chrono::steady_clock::now();

    CertificationReport report;
    report.k = k;
    report.bound = bound;
    report.strategy = Strategy::directed;

    std::vector<Branch> branches;
    if (k == 3) {
        branches.emplace_back(std::nullopt);
    } else {
        for (const SeedSolution& s : solve_seed_system(k)) branches.emplace_back(s);
    }
    std::vector<std::function<void()>> jobs;
    for (Branch& b : branches) {
        jobs.emplace_back([&b, k, bound] {
            if (k == 3) {
                directed_k3(b, bound);
            } else if (k == 4) {
                directed_k4(b, bound);
            } else {
                directed_k5plus(b, k, bound);
            }
            b.finish(bound);
        });
    }
    run_branches(jobs, opts.threads);

    for (Branch& b : branches) {
        report.identity_bound = std::max(report.identity_bound, b.max_total());
        report.branches.push_back(std::move(b.outcome()));
    }
    assemble(report, true);
    report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

CertificationReport generic_certify(int k, Int bound, const CertifyOptions& opts) {
    check_k(k);
    if (bound < 1) throw std::invalid_argument("generic_certify: requires bound >= 1");
    const Int identity_bound = opts.identity_bound > 0 ? opts.identity_bound : 3 * bound;
    if (identity_bound < 3 * bound) {
        throw std::invalid_argument("generic_certify: identity bound must be at least 3 * bound");
    }
    const auto start = std::chrono::steady_clock::now();

    CertificationReport report;
    report.k = k;
    report.bound = bound;
    report.strategy = Strategy::generic;
    report.identity_bound = identity_bound;

    std::vector<Branch> branches;
    if (k == 3) {
        branches.emplace_back(std::nullopt);
    } else {
        for (const SeedSolution& s : solve_seed_system(k)) branches.emplace_back(s);
    }
    std::vector<std::function<void()>> jobs;
    for (Branch& b : branches) {
        jobs.emplace_back([&b, k, bound, identity_bound, &opts] {
            if (b.outcome().seed) b.seed();
            PropagationResult res =
                propagate_streaming(b.f(), k, identity_bound, opts.checks_per_total);
            for (PropagationStep& st : res.steps) {
                b.track(st.identity);
                if (st.kind == StepKind::solved) {
                    b.record({"identity", st.solved_atom->value(), st.solved_atom, st.value,
                              {st.identity}, std::nullopt});
                }
            }
            b.outcome().assignment = std::move(res.f);
            if (res.verdict == PropagationVerdict::contradiction) {
                PropagationStep& last = res.steps.back();
                b.refute("contradiction", last.identity, *last.lhs, *last.rhs, "");
            }
            b.finish(bound);
        });
    }
    run_branches(jobs, opts.threads);

    for (Branch& b : branches) report.branches.push_back(std::move(b.outcome()));
    assemble(report, false);
    report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

void require_unique(const CertificationReport& report) {
    if (report.verdict == Verdict::unique) return;
    Int stuck = report.first_stuck.value_or(0);
    throw UniquenessFailure(stuck, "certification for k=" + std::to_string(report.k) + " ended " +
                                       to_string(report.verdict) +
                                       (stuck ? " (first stuck n=" + std::to_string(stuck) + ")" : ""));
}

}  // namespace addunique

#ifndef ADDUNIQUE_ENGINE_HPP
#define ADDUNIQUE_ENGINE_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "addunique/arith.hpp"
#include "addunique/identities.hpp"
#include "addunique/multfunc.hpp"
#include "addunique/rational.hpp"

namespace addunique {

// ---------------------------------------------------------------------------
// Seed systems
// ---------------------------------------------------------------------------

/// Values of f(2), f(3), f(5) solving a seed system.
struct SeedSolution {
    Rational f2;
    Rational f3;
    Rational f5;

    friend auto operator<=>(const SeedSolution&, const SeedSolution&) = default;
};

/// Everything the seed elimination produced, for display and audit.
struct SeedAnalysis {
    int k = 0;
    std::vector<Identity> sources;  ///< identities the equations come from
    IntPolynomial cubic{{1}};       ///< eliminated polynomial in b = f(3)
    std::vector<Rational> roots;
    std::string zero_guard;         ///< why b = 0 is not a solution
    std::vector<SeedSolution> solutions;
};

/// Residuals of the seed system for k (>= 4) at (a, b, c) = (f2, f3, f5);
/// all zero iff the triple solves it.
std::vector<Rational> seed_residuals(int k, const SeedSolution& s);

/// Full elimination pipeline; throws EliminationMismatch if a back-substituted
/// triple fails the original system. Requires k >= 4.
SeedAnalysis analyze_seed_system(int k);

/// Solutions sorted ascending by (f2, f3, f5).
std::vector<SeedSolution> solve_seed_system(int k);

// ---------------------------------------------------------------------------
// Reduction and propagation
// ---------------------------------------------------------------------------

enum class StepKind { solved, contradiction, tautology };

std::string to_string(StepKind kind);

struct PropagationStep {
    Identity identity;
    StepKind kind = StepKind::tautology;
    std::optional<PrimePower> solved_atom;
    std::optional<Rational> value;
    // Side values for a contradiction. When the unknown cancels these are the
    // residual constants of a*x + lhs = a*x + rhs.
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
};

/// Substitutes known values into f(total) = sum f(part) and solves it when a
/// single atom is unknown.
PropagationStep reduce_identity(const PartialMultFn& f, const Identity& id);

enum class PropagationVerdict { fixpoint, contradiction };

struct PropagationResult {
    PartialMultFn f;
    std::vector<PropagationStep> steps;  ///< solved steps and the final contradiction
    PropagationVerdict verdict = PropagationVerdict::fixpoint;
    std::size_t passes = 0;
};

/// Scans ids in order, repeatedly, until a pass adds nothing or an identity
/// is contradicted.
PropagationResult propagate(PartialMultFn f, const std::vector<Identity>& ids);

/// Same fixpoint over every k-part identity with total <= identity_bound,
/// enumerated per total instead of materialized. Once both sides of a total
/// are known, at most checks_per_total fully known identities are evaluated
/// for it.
PropagationResult propagate_streaming(PartialMultFn f, int k, Int identity_bound,
                                      std::size_t checks_per_total);

// ---------------------------------------------------------------------------
// Identities singled out by the proof
// ---------------------------------------------------------------------------

/// Refutes f2 = 1/4, f3 = 2/3, f5 = -2: total 3(k+2) when 3 does not divide
/// k+2, else 3(k+4). Requires k >= 5.
Identity exclusion_identity(int k);

/// First k-part representation of the least T_s that is a sum of k positive
/// triangulars. Throws SearchExhausted when no s <= search_bound qualifies.
Identity refute_all_ones(int k, Int search_bound);

/// Least M > k + 3 with gcd(M, N) = 1.
Int coprime_cover(Int n, int k);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

enum class Strategy { directed, generic };
enum class BranchStatus { refuted, certified, inconclusive };
enum class Verdict { unique, failure, inconclusive };

std::string to_string(Strategy s);
std::string to_string(BranchStatus s);
std::string to_string(Verdict v);

/// One entry in a branch's derivation log.
struct CertStep {
    /// seed | identity | split | star | representation | coprime | check
    std::string rule;
    Int n = 0;                            ///< the integer whose value is fixed
    std::optional<PrimePower> atom;       ///< atom pinned, if any
    std::optional<Rational> value;
    std::vector<Identity> identities;     ///< identities used, in order
    std::optional<Int> cofactor;          ///< M for coprime, unused otherwise
};

struct Evidence {
    std::string rule;  ///< contradiction | exclusion | all_ones
    Identity identity;
    Rational lhs;
    Rational rhs;
    std::string detail;
};

struct BranchOutcome {
    std::optional<SeedSolution> seed;  ///< none for k = 3
    BranchStatus status = BranchStatus::inconclusive;
    std::optional<Evidence> evidence;
    std::vector<CertStep> steps;
    PartialMultFn assignment;
    std::optional<Int> first_stuck;  ///< least n <= bound with f(n) != n
    bool starved = false;            ///< stuck on an unpinned atom
};

struct NStatus {
    Int n = 0;
    std::string status;            ///< identity | unknown | mismatch
    std::optional<Rational> value;
    std::optional<std::size_t> via;  ///< index into the certified branch's steps
};

struct CertificationReport {
    int k = 0;
    Int bound = 0;
    Strategy strategy = Strategy::directed;
    Int identity_bound = 0;
    Verdict verdict = Verdict::failure;
    std::vector<BranchOutcome> branches;
    std::vector<NStatus> table;
    std::optional<Int> first_stuck;
    std::chrono::milliseconds duration{0};

    /// The certified branch, if exactly one exists.
    const BranchOutcome* certified() const;
};

struct CertifyOptions {
    Int identity_bound = 0;  ///< 0 means 3 * bound
    unsigned threads = 1;    ///< cap on concurrently processed branches
    std::size_t checks_per_total = 16;
};

/// Replays the case analysis for k = 3, 4 and k >= 5 with its specific
/// witnesses. Requires k >= 3 and bound >= 25.
CertificationReport directed_certify(int k, Int bound, const CertifyOptions& opts = {});

/// Seeds plus blind propagation over all identities up to identity_bound.
/// Requires k >= 3 and identity_bound >= 3 * bound.
CertificationReport generic_certify(int k, Int bound, const CertifyOptions& opts = {});

/// Throws UniquenessFailure unless the verdict is unique.
void require_unique(const CertificationReport& report);

}  // namespace addunique

#endif  // ADDUNIQUE_ENGINE_HPP

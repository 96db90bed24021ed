#ifndef ADDUNIQUE_ERRORS_HPP
#define ADDUNIQUE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addunique {

// Detectors that would falsify a proven statement derive from
// TheoremViolation; the CLI maps them to exit code 1.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sum-of-k-triangulars fact failed at the reported integer.
class LemmaViolation : public TheoremViolation {
public:
    LemmaViolation(std::int64_t m, const std::string& what)
        : TheoremViolation(what), offending_(m) {}
    std::int64_t offending() const { return offending_; }

private:
    std::int64_t offending_;
};

/// No three-triangular decomposition was found.
class GaussViolation : public TheoremViolation {
public:
    explicit GaussViolation(std::int64_t n)
        : TheoremViolation("no sum of three triangular numbers equals " + std::to_string(n)),
          n_(n) {}
    std::int64_t n() const { return n_; }

private:
    std::int64_t n_;
};

/// A back-substituted seed triple failed the original system.
class EliminationMismatch : public TheoremViolation {
public:
    using TheoremViolation::TheoremViolation;
};

/// Certification could not single out the identity branch.
class UniquenessFailure : public TheoremViolation {
public:
    UniquenessFailure(std::int64_t stuck, const std::string& what)
        : TheoremViolation(what), stuck_(stuck) {}
    std::int64_t first_stuck() const { return stuck_; }

private:
    std::int64_t stuck_;
};

class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace addunique

#endif  // ADDUNIQUE_ERRORS_HPP

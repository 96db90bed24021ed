#ifndef ADDUNIQUE_CLI_HPP
#define ADDUNIQUE_CLI_HPP

#include <ostream>
#include <string>
#include <variant>

#include "addunique/engine.hpp"

namespace addunique::cli {

enum ExitCode : int { kOk = 0, kContradiction = 1, kUsage = 2, kInconclusive = 3 };

struct Certify {
    int k = 0;
    Int bound = 1000;
    Strategy strategy = Strategy::directed;
    Int identity_bound = 0;  ///< 0 means 3 * bound
    std::string json_path;
    bool timing = false;
};

struct Seeds {
    int k = 0;
    std::string json_path;
};

struct Lemma {
    int k = 0;
    Int bound = 0;
    std::string json_path;
};

struct Repr {
    Int n = 0;
    int k = 0;
    bool count_only = false;
    std::string json_path;
};

struct Gauss {
    Int n = 0;
    std::string json_path;
};

using Command = std::variant<Certify, Seeds, Lemma, Repr, Gauss>;

/// Raised for invalid arguments; the message names the offending flag.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checks the per-command ranges (k >= 3 for certify/seeds, k >= 4 for lemma).
void validate(const Command& cmd);

/// Runs a validated command, writing a summary to out and JSON to the
/// command's json_path when set. Returns an ExitCode.
int run(const Command& cmd, std::ostream& out, unsigned threads = 1);

/// Parses argv, reads ADDUNIQUE_THREADS, and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace addunique::cli

#endif  // ADDUNIQUE_CLI_HPP

#include "addunique/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <map>

#include "addunique/errors.hpp"
#include "addunique/serialize.hpp"
#include "addunique/triangular.hpp"

namespace addunique::cli {

namespace {

void write_json(const std::string& path, const Json& j) {
    if (path.empty()) return;
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("--json: cannot open '" + path + "' for writing");
    os << j.dump(2) << '\n';
}

std::string join(const std::set<Int>& values) {
    std::string s = "{";
    bool first = true;
    for (Int v : values) {
        if (!first) s += ", ";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::string parts_str(const std::vector<Int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::string triple(const SeedSolution& s) {
    return "(" + s.f2.str() + ", " + s.f3.str() + ", " + s.f5.str() + ")";
}

int run_certify(const Certify& c, std::ostream& out, unsigned threads) {
    CertifyOptions opts;
    opts.identity_bound = c.identity_bound;
    opts.threads = threads;
    CertificationReport report = c.strategy == Strategy::directed ? directed_certify(c.k, c.bound, opts)
                                                                   : generic_certify(c.k, c.bound, opts);
    out << "k = " << report.k << ", bound = " << report.bound << ", strategy = " << to_string(report.strategy)
        << ", identity bound = " << report.identity_bound << '\n';
    for (std::size_t i = 0; i < report.branches.size(); ++i) {
        const BranchOutcome& b = report.branches[i];
        out << "  branch " << i + 1 << ' ' << (b.seed ? triple(*b.seed) : std::string("(from scratch)")) << ": "
            << to_string(b.status);
        if (b.evidence) {
            out << " by " << b.evidence->rule << " at total " << b.evidence->identity.total << " "
                << parts_str(b.evidence->identity.parts) << ": " << b.evidence->lhs << " vs " << b.evidence->rhs;
        } else if (b.first_stuck) {
            out << " (stuck at n = " << *b.first_stuck << ")";
        }
        out << ", " << b.steps.size() << " steps\n";
    }
    out << "verdict: " << to_string(report.verdict);
    if (report.verdict == Verdict::unique) out << " (f(n) = n for all n <= " << report.bound << ")";
    if (report.first_stuck) out << " (first stuck n = " << *report.first_stuck << ")";
    out << '\n';
    if (c.timing) out << "duration: " << report.duration.count() << " ms\n";
    write_json(c.json_path, to_json(report, c.timing));

    switch (report.verdict) {
        case Verdict::unique: return kOk;
        case Verdict::inconclusive: return kInconclusive;
        case Verdict::failure: return kContradiction;
    }
    return kContradiction;
}

int run_seeds(const Seeds& s, std::ostream& out) {
    Json j;
    j["k"] = s.k;
    Json sols = Json::array();
    if (s.k == 3) {
        // No seed system: f(3), f(5), f(2) follow one at a time.
        PartialMultFn f;
        Json derivation = Json::array();
        out << "k = 3: base values derived directly\n";
        for (auto parts : {std::vector<Int>{1, 1, 1}, {1, 1, 3}, {1, 3, 6}}) {
            Identity id = identity_for(parts);
            PropagationStep st = reduce_identity(f, id);
            if (st.kind != StepKind::solved) throw UniquenessFailure(id.total, "k=3 base derivation stalled");
            f.set(*st.solved_atom, *st.value);
            out << "  " << id.str() << "  =>  f(" << st.solved_atom->str() << ") = " << *st.value << '\n';
            derivation.push_back({{"identity", to_json(id)}, {"atom", st.solved_atom->str()}, {"value", st.value->str()}});
        }
        SeedSolution sol{*f.value_of(PrimePower(2, 1)), *f.value_of(PrimePower(3, 1)), *f.value_of(PrimePower(5, 1))};
        out << "solutions (f(2), f(3), f(5)):\n  " << triple(sol) << '\n';
        sols.push_back(to_json(sol));
        j["derivation"] = std::move(derivation);
    } else {
        SeedAnalysis a = analyze_seed_system(s.k);
        out << "k = " << s.k << ": seed system from\n";
        Json sources = Json::array();
        for (const Identity& id : a.sources) {
            out << "  " << id.str() << '\n';
            sources.push_back(to_json(id));
        }
        out << "eliminated cubic in f(3): " << a.cubic.str() << '\n';
        out << "f(3) = 0 excluded: " << a.zero_guard << '\n';
        out << "rational roots:";
        Json roots = Json::array();
        for (const Rational& r : a.roots) {
            out << ' ' << r;
            roots.push_back(r.str());
        }
        out << "\nsolutions (f(2), f(3), f(5)):\n";
        for (const SeedSolution& sol : a.solutions) {
            out << "  " << triple(sol) << '\n';
            sols.push_back(to_json(sol));
        }
        Json coeffs = Json::array();
        for (const BigInt& c : a.cubic.coefficients()) coeffs.push_back(c.str());
        j["sources"] = std::move(sources);
        j["cubic"] = std::move(coeffs);
        j["roots"] = std::move(roots);
    }
    j["solutions"] = std::move(sols);
    write_json(s.json_path, j);
    return kOk;
}

int run_lemma(const Lemma& l, std::ostream& out) {
    std::set<Int> ex = exceptional_set(l.k, l.bound);
    out << "not a sum of " << l.k << " positive triangular numbers (up to " << l.bound << "): " << join(ex) << '\n';
    Json values = Json::array();
    for (Int v : ex) values.push_back(std::to_string(v));
    write_json(l.json_path, Json{{"k", l.k}, {"bound", std::to_string(l.bound)}, {"exceptional", std::move(values)}});
    return kOk;
}

int run_repr(const Repr& r, std::ostream& out) {
    Json reps = Json::array();
    std::size_t count = 0;
    for_each_k_representation(r.n, r.k, [&](const std::vector<Int>& parts) {
        ++count;
        if (!r.count_only) {
            Json pj = Json::array();
            for (Int p : parts) pj.push_back(std::to_string(p));
            reps.push_back(std::move(pj));
        }
        return true;
    });
    out << r.n << " as a sum of " << r.k << " positive triangular numbers: " << count << " representation"
        << (count == 1 ? "" : "s") << '\n';
    if (!r.count_only) {
        for (const Json& pj : reps) {
            std::vector<Int> parts;
            for (const Json& p : pj) parts.push_back(std::stoll(p.get<std::string>()));
            out << "  " << parts_str(parts) << '\n';
        }
    }
    Json j{{"n", std::to_string(r.n)}, {"k", r.k}, {"count", std::to_string(count)}};
    if (!r.count_only) j["representations"] = std::move(reps);
    write_json(r.json_path, j);
    return kOk;
}

int run_gauss(const Gauss& g, std::ostream& out) {
    auto t = gauss_three_decomposition(g.n);
    out << g.n << " = " << t[0] << " + " << t[1] << " + " << t[2] << '\n';
    write_json(g.json_path, Json{{"n", std::to_string(g.n)},
                                 {"parts", {std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])}}});
    return kOk;
}

unsigned threads_from_env() {
    const char* v = std::getenv("ADDUNIQUE_THREADS");
    if (!v || !*v) return 1;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1) throw UsageError("ADDUNIQUE_THREADS must be a positive integer, got '" + std::string(v) + "'");
    return static_cast<unsigned>(n);
}

}  // namespace

void validate(const Command& cmd) {
    std::visit(
        [](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Certify>) {
                if (c.k < 3) throw UsageError("--k: certify requires k >= 3");
                if (c.strategy == Strategy::directed && c.bound < 25)
                    throw UsageError("--bound: directed certification requires bound >= 25");
                if (c.bound < 1) throw UsageError("--bound: must be positive");
                if (c.identity_bound != 0 && c.identity_bound < 3 * c.bound)
                    throw UsageError("--identity-bound: must be at least 3 * bound");
            } else if constexpr (std::is_same_v<T, Seeds>) {
                if (c.k < 3) throw UsageError("--k: seeds requires k >= 3");
            } else if constexpr (std::is_same_v<T, Lemma>) {
                if (c.k < 4) throw UsageError("--k: lemma requires k >= 4");
                if (c.bound < c.k + 10) throw UsageError("--bound: lemma requires bound >= k + 10");
            } else if constexpr (std::is_same_v<T, Repr>) {
                if (c.n < 1) throw UsageError("--n: must be positive");
                if (c.k < 1) throw UsageError("--k: must be positive");
            } else {
                if (c.n < 1) throw UsageError("--n: must be positive");
            }
        },
        cmd);
}

int run(const Command& cmd, std::ostream& out, unsigned threads) {
    return std::visit(
        [&](const auto& c) -> int {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Certify>) {
                return run_certify(c, out, threads);
            } else if constexpr (std::is_same_v<T, Seeds>) {
                return run_seeds(c, out);
            } else if constexpr (std::is_same_v<T, Lemma>) {
                return run_lemma(c, out);
            } else if constexpr (std::is_same_v<T, Repr>) {
                return run_repr(c, out);
            } else {
                return run_gauss(c, out);
            }
        },
        cmd);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certifies that k-additivity on positive triangular numbers forces a multiplicative f to be the identity"};
    app.require_subcommand(1);

    Certify certify;
    Seeds seeds;
    Lemma lemma;
    Repr repr;
    Gauss gauss;
    const std::map<std::string, Strategy> strategies{{"directed", Strategy::directed}, {"generic", Strategy::generic}};

    auto* c = app.add_subcommand("certify", "certify f(n) = n up to a bound");
    c->add_option("--k", certify.k, "number of summands")->required();
    c->add_option("--bound", certify.bound, "certification bound")->capture_default_str();
    c->add_option("--strategy", certify.strategy, "directed or generic")
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
    c->add_option("--identity-bound", certify.identity_bound, "largest identity total (default 3 * bound)");
    c->add_option("--json", certify.json_path, "write the full report here");
    c->add_flag("--timing", certify.timing, "report wall-clock duration (breaks byte-identical JSON)");

    auto* s = app.add_subcommand("seeds", "solve the seed system for f(2), f(3), f(5)");
    s->add_option("--k", seeds.k, "number of summands")->required();
    s->add_option("--json", seeds.json_path, "write JSON here");

    auto* l = app.add_subcommand("lemma", "integers that are not sums of k positive triangulars");
    l->add_option("--k", lemma.k, "number of summands")->required();
    l->add_option("--bound", lemma.bound, "search bound")->required();
    l->add_option("--json", lemma.json_path, "write JSON here");

    auto* r = app.add_subcommand("repr", "representations of n as a sum of k positive triangulars");
    r->add_option("--n", repr.n, "integer to represent")->required();
    r->add_option("--k", repr.k, "number of summands")->required();
    r->add_flag("--count-only", repr.count_only, "print only the count");
    r->add_option("--json", repr.json_path, "write JSON here");

    auto* g = app.add_subcommand("gauss", "decompose n into three triangular numbers");
    g->add_option("--n", gauss.n, "integer to decompose")->required();
    g->add_option("--json", gauss.json_path, "write JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    Command cmd;
    if (c->parsed()) {
        cmd = certify;
    } else if (s->parsed()) {
        cmd = seeds;
    } else if (l->parsed()) {
        cmd = lemma;
    } else if (r->parsed()) {
        cmd = repr;
    } else {
        cmd = gauss;
    }

    try {
        validate(cmd);
        return run(cmd, out, threads_from_env());
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << '\n';
        return kContradiction;
    }
}

}  // namespace addunique::cli

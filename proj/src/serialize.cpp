#include "addunique/serialize.hpp"

#include <stdexcept>

namespace addunique {

namespace {

std::string dec(Int v) { return std::to_string(v); }

Json parts_json(const std::vector<Int>& parts) {
    Json a = Json::array();
    for (Int p : parts) a.push_back(dec(p));
    return a;
}

Json atom_json(const PrimePower& a) { return Json{{"p", a.p}, {"e", a.e}}; }

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

}  // namespace

Json to_json(const PartialMultFn& f) {
    Json atoms = Json::array();
    for (const auto& [atom, v] : f.assignments()) {
        atoms.push_back({{"p", atom.p}, {"e", atom.e}, {"num", v.num().str()}, {"den", v.den().str()}});
    }
    return Json{{"atoms", std::move(atoms)}};
}

PartialMultFn multfn_from_json(const Json& j) {
    try {
        PartialMultFn f;
        for (const Json& a : j.at("atoms")) {
            PrimePower atom(a.at("p").get<Int>(), a.at("e").get<int>());
            Rational v(BigInt(a.at("num").get<std::string>()), BigInt(a.at("den").get<std::string>()));
            f.set(atom, v);
        }
        return f;
    } catch (const Conflict&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed multiplicative function JSON: ") + e.what());
    }
}

Json to_json(const Identity& id) {
    return Json{{"k", id.k}, {"total", dec(id.total)}, {"parts", parts_json(id.parts)}};
}

Json to_json(const SeedSolution& s) {
    return Json{{"f2", s.f2.str()}, {"f3", s.f3.str()}, {"f5", s.f5.str()}};
}

Json to_json(const CertStep& step) {
    Json j{{"rule", step.rule}, {"n", dec(step.n)}};
    j["atom"] = step.atom ? atom_json(*step.atom) : Json(nullptr);
    j["value"] = optional_rational(step.value);
    Json ids = Json::array();
    for (const Identity& id : step.identities) ids.push_back(to_json(id));
    j["identities"] = std::move(ids);
    if (step.cofactor) j["cofactor"] = dec(*step.cofactor);
    return j;
}

Json to_json(const CertificationReport& report, bool include_timing) {
    Json j;
    j["k"] = report.k;
    j["bound"] = dec(report.bound);
    j["identity_bound"] = dec(report.identity_bound);
    j["strategy"] = to_string(report.strategy);
    j["verdict"] = to_string(report.verdict);
    j["first_stuck"] = report.first_stuck ? Json(dec(*report.first_stuck)) : Json(nullptr);

    Json branches = Json::array();
    const BranchOutcome* cert = report.certified();
    for (const BranchOutcome& b : report.branches) {
        Json bj;
        bj["seed"] = b.seed ? to_json(*b.seed) : Json(nullptr);
        bj["status"] = to_string(b.status);
        if (b.evidence) {
            bj["evidence"] = {{"rule", b.evidence->rule},
                              {"identity", to_json(b.evidence->identity)},
                              {"lhs", b.evidence->lhs.str()},
                              {"rhs", b.evidence->rhs.str()},
                              {"detail", b.evidence->detail}};
        } else {
            bj["evidence"] = nullptr;
        }
        bj["first_stuck"] = b.first_stuck ? Json(dec(*b.first_stuck)) : Json(nullptr);
        bj["step_count"] = b.steps.size();
        // The certified branch's steps are the top-level certificate.
        if (&b != cert) {
            Json steps = Json::array();
            for (const CertStep& st : b.steps) steps.push_back(to_json(st));
            bj["steps"] = std::move(steps);
        }
        bj["assignment"] = to_json(b.assignment);
        branches.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches);

    Json steps = Json::array();
    if (cert) {
        for (const CertStep& st : cert->steps) steps.push_back(to_json(st));
    }
    j["steps"] = std::move(steps);

    Json table = Json::array();
    for (const NStatus& row : report.table) {
        table.push_back({{"n", dec(row.n)},
                         {"status", row.status},
                         {"value", optional_rational(row.value)},
                         {"via", row.via ? Json(*row.via) : Json(nullptr)}});
    }
    j["table"] = std::move(table);
    if (include_timing) j["duration_ms"] = report.duration.count();
    return j;
}

}  // namespace addunique

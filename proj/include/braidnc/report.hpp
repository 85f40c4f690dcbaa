#pragma once

#include "equality.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace braidnc {

struct CheckRecord {
    std::string id;
    std::string status;  // pass | fail | error
    std::string path;    // symbolic | numeric | exact
    std::string lhs_nf;
    std::string rhs_nf;
    std::int64_t millis = 0;
    std::uint64_t seed = 0;
    std::string detail;

    bool passed() const { return status == "pass"; }
};

struct Report {
    int schema = 1;
    std::string suite;
    std::vector<CheckRecord> records;

    int count(const std::string& status) const {
        int n = 0;
        for (auto& r : records) n += (r.status == status);
        return n;
    }
    bool all_passed() const { return count("pass") == static_cast<int>(records.size()); }

    nlohmann::json to_json(bool with_timing = true) const {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& r : records) {
            nlohmann::json j{{"id", r.id},       {"status", r.status}, {"path", r.path},
                             {"lhs_nf", r.lhs_nf}, {"rhs_nf", r.rhs_nf}, {"seed", r.seed}};
            if (!r.detail.empty()) j["detail"] = r.detail;
            if (with_timing) j["millis"] = r.millis;
            arr.push_back(std::move(j));
        }
        nlohmann::json summary{{"id", "summary"},
                               {"checks", records.size()},
                               {"pass", count("pass")},
                               {"fail", count("fail")},
                               {"error", count("error")}};
        arr.push_back(std::move(summary));
        return nlohmann::json{{"schema", schema}, {"suite", suite}, {"records", std::move(arr)}};
    }
};

/// A named deferred check; suites are vectors of these, executed in parallel
/// with results aggregated in suite order.
struct Check {
    std::string id;
    std::function<CheckRecord()> run;
};

inline CheckRecord run_timed(const Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord r;
    try {
        r = c.run();
    } catch (const std::exception& e) {
        r.status = "error";
        r.detail = e.what();
    }
    r.id = c.id;
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
}

inline Report run_checks(const std::string& suite_name, const std::vector<Check>& checks,
                         unsigned jobs = 0) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    Report rep;
    rep.suite = suite_name;
    rep.records.resize(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= checks.size()) return;
            rep.records[k] = run_timed(checks[k]);
        }
    };
    if (jobs == 1 || checks.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rep;
}

/// Element identity check: symbolic first, numeric fallback; a symbolic pass
/// is re-verified numerically and any disagreement is flagged as an error
/// (the suite treats that as a soundness failure, not a pass or fail).
inline CheckRecord elem_check(const Element& lhs, const Element& rhs,
                              const OracleOptions& opt = {}) {
    CheckRecord r;
    r.seed = opt.seed;
    EqualityVerdict v = equals(lhs, rhs, opt);
    r.path = v.path();
    r.lhs_nf = normal_form(lhs).render();
    r.rhs_nf = normal_form(rhs).render();
    if (v.equal()) {
        if (v.symbolic() && !numeric_confirms(lhs, rhs, opt)) {
            r.status = "error";
            r.detail = "symbolic pass contradicted by the numeric oracle";
        } else {
            r.status = "pass";
        }
    } else {
        r.status = "fail";
        r.detail = v.witness;
    }
    return r;
}

/// Operator identity check through op_equals, with numeric re-verification
/// of symbolic passes on every generator value.
inline CheckRecord op_check(const OperatorExpr& P, const OperatorExpr& Q,
                            const OracleOptions& opt = {}) {
    CheckRecord r;
    r.seed = opt.seed;
    EqualityVerdict v = op_equals(P, Q, opt);
    r.path = v.path();
    const Presentation* pres = P.presentation() ? P.presentation() : Q.presentation();
    if (v.equal()) {
        r.status = "pass";
        if (v.symbolic() && pres) {
            for (std::size_t g = 0; g < pres->num_generators(); ++g) {
                Element a = apply_gen(P, static_cast<int>(g));
                Element b = apply_gen(Q, static_cast<int>(g));
                if (!numeric_confirms(a, b, opt)) {
                    r.status = "error";
                    r.detail = "symbolic pass contradicted by the numeric oracle on " +
                               pres->display_name(static_cast<int>(g));
                    break;
                }
            }
        }
        r.lhs_nf = "0";
        r.rhs_nf = "0";
    } else {
        r.status = "fail";
        r.detail = v.witness;
        if (pres)
            for (std::size_t g = 0; g < pres->num_generators(); ++g) {
                Element d = normal_form(apply_gen(P, static_cast<int>(g)) -
                                        apply_gen(Q, static_cast<int>(g)));
                if (!d.is_zero()) {
                    r.lhs_nf = apply_gen(P, static_cast<int>(g)).render();
                    r.rhs_nf = apply_gen(Q, static_cast<int>(g)).render();
                    break;
                }
            }
    }
    return r;
}

/// Check of an exact boolean condition (rank values, arithmetic identities).
inline CheckRecord fact_check(bool ok, const std::string& got, const std::string& want) {
    CheckRecord r;
    r.path = "exact";
    r.status = ok ? "pass" : "fail";
    r.lhs_nf = got;
    r.rhs_nf = want;
    return r;
}

} // namespace braidnc

#pragma once

#include "hadamard.hpp"
#include "json_io.hpp"

#include <iostream>
#include <optional>

namespace rankmw {

/// A fully resolved command for run_job. Exit codes: 0 success, 1 identity
/// violation in verify, 2 parse/usage error, 3 enumeration guard exceeded.
struct JobSpec {
    std::string command;
    Json field;            // field description (may come from the code object)
    Json generator;        // array of rows; null if absent
    std::string metric = "rank";  // "rank" | "hamming" | "both"
    std::string format = "json";  // "json" | "text"
    std::uint64_t guard = kDefaultEnumGuard;
    unsigned workers = 1;
    std::optional<unsigned> nu;
    std::optional<unsigned> n, k;  // for mrd
};

inline JobSpec job_from_json(const Json& j) {
    JobSpec spec;
    spec.command = j.at("command").get<std::string>();
    if (j.contains("field")) spec.field = j.at("field");
    if (j.contains("generator")) spec.generator = j.at("generator");
    if (j.contains("code")) {
        const Json& code = j.at("code");
        if (code.contains("field") && spec.field.is_null()) spec.field = code.at("field");
        if (code.contains("generator")) spec.generator = code.at("generator");
    }
    if (j.contains("metric")) spec.metric = j.at("metric").get<std::string>();
    if (j.contains("options")) {
        const Json& o = j.at("options");
        spec.format = o.value("format", spec.format);
        spec.guard = o.value("guard", spec.guard);
        spec.workers = o.value("workers", spec.workers);
        if (o.contains("nu")) spec.nu = o.at("nu").get<unsigned>();
        if (o.contains("n")) spec.n = o.at("n").get<unsigned>();
        if (o.contains("k")) spec.k = o.at("k").get<unsigned>();
    }
    return spec;
}

namespace detail {

inline Metric metric_from_string(const std::string& s) {
    if (s == "rank") return Metric::rank;
    if (s == "hamming") return Metric::hamming;
    throw std::invalid_argument("unknown metric '" + s + "'");
}

inline const char* metric_name(Metric m) { return m == Metric::rank ? "rank" : "hamming"; }

inline std::vector<Metric> metrics_of(const JobSpec& spec) {
    if (spec.metric == "both") return {Metric::rank, Metric::hamming};
    return {metric_from_string(spec.metric)};
}

inline LinearCode code_from_spec(const JobSpec& spec, const TowerPtr& tower) {
    if (spec.generator.is_null()) throw std::invalid_argument("command requires a generator");
    return LinearCode(tower, generator_from_json(*tower, spec.generator));
}

inline Json code_to_json(const LinearCode& C) {
    Json j;
    j["n"] = C.n();
    j["k"] = C.k();
    j["generator"] = generator_to_json(C.tower(), C.generator());
    return j;
}

inline CodeParams params_of(const LinearCode& C) {
    return CodeParams(C.tower().q(), C.tower().m(), static_cast<unsigned>(C.n()),
                      static_cast<unsigned>(C.k()));
}

inline Json params_to_json(const CodeParams& p) {
    Json j;
    j["q"] = p.q;
    j["m"] = p.m;
    j["n"] = p.n;
    j["k"] = p.k;
    return j;
}

inline std::string rat_to_string(const BigRat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline void emit(const JobSpec& spec, const Json& report, std::ostream& out) {
    if (spec.format == "text") {
        // flat, line-oriented rendering of the same report
        std::function<void(const std::string&, const Json&)> walk =
            [&](const std::string& prefix, const Json& v) {
                if (v.is_object()) {
                    for (auto it = v.begin(); it != v.end(); ++it)
                        walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
                } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
                    for (std::size_t i = 0; i < v.size(); ++i)
                        walk(prefix + "[" + std::to_string(i) + "]", v[i]);
                } else {
                    out << prefix << ": " << v.dump() << "\n";
                }
            };
        walk("", report);
    } else {
        out << report.dump(2) << "\n";
    }
}

inline Json moment_table(const LinearCode& C, const JobSpec& spec) {
    const CodeParams p = params_of(C);
    HomPoly A = weight_enumerator(C, Metric::rank, spec.guard, spec.workers).poly;
    HomPoly B = weight_enumerator(dual_code(C), Metric::rank, spec.guard, spec.workers).poly;
    Json rows = Json::array();
    unsigned lo = 0, hi = p.n;
    if (spec.nu) lo = hi = *spec.nu;
    for (unsigned nu = lo; nu <= hi; ++nu) {
        auto [lhs, rhs] = rank_moment_sides(A, B, p, nu);
        Json row;
        row["nu"] = nu;
        row["lhs"] = rat_to_string(lhs);
        row["rhs"] = rat_to_string(rhs);
        row["equal"] = (lhs == rhs);
        rows.push_back(std::move(row));
    }
    return rows;
}

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
};

inline std::vector<CheckResult> verify_checks(const LinearCode& C, const JobSpec& spec) {
    std::vector<CheckResult> checks;
    auto push = [&](const std::string& name, bool ok) {
        checks.push_back({name, ok ? "pass" : "fail"});
    };
    const CodeParams p = params_of(C);
    const CodeParams pd(p.q, p.m, p.n, p.n - p.k);
    const LinearCode D = dual_code(C);

    HomPoly a_rank = weight_enumerator(C, Metric::rank, spec.guard, spec.workers).poly;
    HomPoly b_rank = weight_enumerator(D, Metric::rank, spec.guard, spec.workers).poly;
    HomPoly t_rank = rank_macwilliams(a_rank, p);
    push("rank_transform_vs_brute_dual", t_rank == b_rank);
    push("rank_theorem_vs_kernel_form", rank_macwilliams_via_kernel(a_rank, p) == t_rank);
    push("rank_round_trip", rank_macwilliams(t_rank, pd) == a_rank);

    HomPoly a_ham = weight_enumerator(C, Metric::hamming, spec.guard, spec.workers).poly;
    HomPoly b_ham = weight_enumerator(D, Metric::hamming, spec.guard, spec.workers).poly;
    push("hamming_transform_vs_brute_dual", hamming_macwilliams(a_ham, p) == b_ham);

    bool moments_ok = true;
    for (unsigned nu = 0; nu <= p.n; ++nu) {
        auto [lhs, rhs] = rank_moment_sides(a_rank, b_rank, p, nu);
        moments_ok = moments_ok && lhs == rhs;
    }
    push("rank_moments", moments_ok);

    // Hadamard closed forms, spot-checked on the generator rows. Defined
    // only for prime q, and the brute-force sum walks all of GF(q^m)^n.
    const FieldTower& t = C.tower();
    bool in_scope = t.s() == 1 &&
                    pow_int(BigInt(t.q_to_m()), static_cast<unsigned long long>(C.n())) <=
                        kDefaultHadamardGuard;
    if (!in_scope) {
        checks.push_back({"hadamard_closed_forms_rows", "skipped"});
        checks.push_back({"hadamard_dual_vector_lemma_rows", "skipped"});
    } else {
        bool hats = true, lemma = true;
        for (std::size_t r = 0; r < C.k(); ++r) {
            auto row = C.generator().row(r);
            hats = hats && check_rank_hat(t, row) && check_hamming_hat(t, row);
            lemma = lemma && check_dual_vector_lemma(C.tower_ptr(), Metric::rank, row) &&
                    check_dual_vector_lemma(C.tower_ptr(), Metric::hamming, row);
        }
        push("hadamard_closed_forms_rows", hats);
        push("hadamard_dual_vector_lemma_rows", lemma);
    }
    return checks;
}

}  // namespace detail

/// Execute one command and write its report. Returns the process exit code.
inline int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    using namespace detail;
    try {
        if (spec.field.is_null()) throw std::invalid_argument("missing field description");
        TowerPtr tower = tower_from_json(spec.field);
        Json report;
        report["command"] = spec.command;
        report["field"] = field_to_json(*tower);
        int exit_code = 0;

        if (spec.command == "enumerate") {
            LinearCode C = code_from_spec(spec, tower);
            report["code"] = code_to_json(C);
            Json enums;
            for (Metric metric : metrics_of(spec))
                enums[metric_name(metric)] =
                    hompoly_to_json(weight_enumerator(C, metric, spec.guard, spec.workers).poly);
            report["enumerators"] = std::move(enums);
        } else if (spec.command == "dual") {
            LinearCode C = code_from_spec(spec, tower);
            LinearCode D = dual_code(C);
            report["code"] = code_to_json(C);
            report["dual"] = code_to_json(D);
            Json enums;
            for (Metric metric : metrics_of(spec))
                enums[metric_name(metric)] =
                    hompoly_to_json(weight_enumerator(D, metric, spec.guard, spec.workers).poly);
            report["dual_enumerators"] = std::move(enums);
        } else if (spec.command == "macwilliams") {
            LinearCode C = code_from_spec(spec, tower);
            const CodeParams p = params_of(C);
            Metric metric = metric_from_string(spec.metric == "both" ? "rank" : spec.metric);
            report["code"] = code_to_json(C);
            report["params"] = params_to_json(p);
            report["metric"] = metric_name(metric);
            HomPoly A = weight_enumerator(C, metric, spec.guard, spec.workers).poly;
            report["input_enumerator"] = hompoly_to_json(A);
            if (metric == Metric::rank) {
                HomPoly B = rank_macwilliams(A, p);
                report["output_enumerator"] = hompoly_to_json(B);
                report["kernel_form_matches"] = (rank_macwilliams_via_kernel(A, p) == B);
            } else {
                report["output_enumerator"] = hompoly_to_json(hamming_macwilliams(A, p));
            }
        } else if (spec.command == "moments") {
            LinearCode C = code_from_spec(spec, tower);
            report["code"] = code_to_json(C);
            report["params"] = params_to_json(params_of(C));
            Json rows = moment_table(C, spec);
            bool all = true;
            for (const auto& row : rows) all = all && row.at("equal").get<bool>();
            report["moments"] = std::move(rows);
            report["all_equal"] = all;
        } else if (spec.command == "mrd") {
            if (!spec.n || !spec.k) throw std::invalid_argument("mrd requires n and k");
            CodeParams p(tower->q(), tower->m(), *spec.n, *spec.k);
            unsigned d = p.n - p.k + 1;
            report["params"] = params_to_json(p);
            report["d"] = d;
            report["enumerator"] = hompoly_to_json(mrd_rank_distribution(p, d).poly);
        } else if (spec.command == "verify") {
            LinearCode C = code_from_spec(spec, tower);
            report["code"] = code_to_json(C);
            auto checks = verify_checks(C, spec);
            Json rows = Json::array();
            bool pass = true;
            for (const auto& c : checks) {
                Json row;
                row["name"] = c.name;
                row["status"] = c.status;
                rows.push_back(std::move(row));
                pass = pass && c.status != "fail";
            }
            report["checks"] = std::move(rows);
            report["pass"] = pass;
            exit_code = pass ? 0 : 1;
        } else {
            throw std::invalid_argument("unknown command '" + spec.command + "'");
        }

        emit(spec, report, out);
        return exit_code;
    } catch (const guard_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rankmw

#pragma once

/**
 * @file commands.hpp
 * @brief Subcommands of the qsc front end.
 *
 * Each command builds one structured report; the JSON and text renderings
 * are produced from the same data. Exit codes: 0 success, 1 a check failed,
 * 2 input or parse error, 3 degenerate algebra.
 */

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsc/cli/job.hpp"
#include "qsc/qsc.hpp"

namespace qsc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2, exit_degenerate = 3 };

struct CommandOutput {
    int exit_code = exit_ok;
    Json data;
    std::string text;
};

inline RingPresentation job_presentation(const Job& job) {
    switch (job.ring) {
        case RingKind::qsc: return qsc_presentation_p1p1(job.epsilon, job.gamma);
        case RingKind::quantum: return quantum_cohomology_products(job.dims);
        case RingKind::classical:
            if (job.bundle == BundleKind::deformation_p1p1) return sheaf_cohomology_p1p1(job.epsilon, job.gamma);
            return classical_cohomology_products(job.dims);
    }
    throw invalid_input("unknown ring");
}

/// tr(psi*psit) = 1 for the P^1 x P^1 sheaf rings, tr(prod H_i^{n_i}) = 1 otherwise.
inline std::pair<std::string, Rational> default_trace(const Job& job, const RingPresentation& pres) {
    if (job.trace) return *job.trace;
    if (pres.table->index_of("psi")) return {"psi*psit", 1};
    std::string ref;
    auto& t = *pres.table;
    for (std::size_t i = 0; i < job.dims.size(); ++i) {
        if (!ref.empty()) ref += '*';
        ref += t[i].name + "^" + std::to_string(job.dims[i]);
    }
    return {ref, 1};
}

inline FrobeniusAlgebra job_frobenius(const Job& job, const RingPresentation& pres) {
    QuotientAlgebra qa = quotient_algebra(pres);
    auto [ref, value] = default_trace(job, pres);
    Polynomial r = parse_poly(ref, pres.table);
    return make_frobenius(std::move(qa), r, value);
}

namespace detail {

inline Json json_basis(const QuotientAlgebra& qa) {
    Json b = Json::array();
    for (const Monomial& m : qa.module_basis) b.push_back(render(m, *qa.table()));
    return b;
}

inline std::string join(const Json& arr, const std::string& sep) {
    std::string s;
    for (const auto& v : arr) {
        if (!s.empty()) s += sep;
        s += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return s;
}

inline Json json_variables(const VariableTable& t) {
    Json vars = Json::array();
    for (const Variable& v : t.variables())
        vars.push_back(Json{{"name", v.name}, {"degree", v.degree}, {"block", std::string(to_string(v.block))}});
    return vars;
}

inline Json json_presentation(const RingPresentation& p) {
    Json rels = Json::array();
    for (const Polynomial& r : p.relations) rels.push_back(render(r));
    return rels;
}

inline std::string text_relations(const Json& rels) {
    std::string s = "relations:\n";
    for (const auto& r : rels) s += "  " + r.get<std::string>() + "\n";
    return s;
}

inline ToricData job_toric(const Job& job) { return product_projective_toric(job.dims); }

inline std::optional<DeformationMatrix> job_matrix(const Job& job, const ToricData& toric) {
    switch (job.bundle) {
        case BundleKind::tangent: return euler_matrix_default(toric);
        case BundleKind::deformation_p1p1: return p1p1_deformation(job.epsilon, job.gamma);
        case BundleKind::matrix: return deformation_from_text(toric, job.matrix_rows);
        case BundleKind::twist_list: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace detail

inline CommandOutput run_present(const Job& job) {
    RingPresentation pres = job_presentation(job);
    QuotientAlgebra qa = quotient_algebra(pres);
    CommandOutput out;
    out.data["command"] = "present";
    out.data["ring"] = pres.description;
    out.data["variables"] = detail::json_variables(*pres.table);
    out.data["relations"] = detail::json_presentation(pres);
    out.data["module_basis"] = detail::json_basis(qa);
    out.data["graded_dimensions"] = qa.graded_dimensions();

    std::ostringstream s;
    s << "ring: " << pres.description << "\n";
    s << "variables:";
    for (const auto& v : out.data["variables"])
        s << " " << v["name"].get<std::string>() << "(" << v["block"].get<std::string>() << ", degree "
          << v["degree"].get<int>() << ")";
    s << "\n" << detail::text_relations(out.data["relations"]);
    s << "module basis: " << detail::join(out.data["module_basis"], ", ") << "\n";
    s << "graded dimensions: " << detail::join(out.data["graded_dimensions"], " ") << "\n";
    out.text = s.str();
    return out;
}

/// Queries from @p exprs (exactly three), else the job, else every basis triple i <= j <= k.
inline CommandOutput run_correlator(const Job& job, const std::vector<std::string>& exprs = {}) {
    RingPresentation pres = job_presentation(job);
    FrobeniusAlgebra fa = job_frobenius(job, pres);
    std::vector<std::array<std::string, 3>> queries;
    if (!exprs.empty()) {
        if (exprs.size() != 3) throw invalid_input("correlator takes exactly three expressions");
        queries.push_back({exprs[0], exprs[1], exprs[2]});
    } else if (!job.queries.empty()) {
        queries = job.queries;
    } else {
        const auto& basis = fa.algebra.module_basis;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j)
                for (std::size_t k = j; k < basis.size(); ++k)
                    queries.push_back({render(basis[i], *pres.table), render(basis[j], *pres.table),
                                       render(basis[k], *pres.table)});
    }

    const VariableTable& t = *pres.table;
    auto [inf, inl] = t.block_range(Block::instanton);
    CommandOutput out;
    out.data["command"] = "correlator";
    out.data["ring"] = pres.description;
    Json instantons = Json::array();
    for (std::size_t i = inf; i < inl; ++i) instantons.push_back(t[i].name);
    out.data["instanton_variables"] = instantons;
    Json rows = Json::array();
    std::ostringstream s;
    s << "ring: " << pres.description << "\n";
    for (const auto& q : queries) {
        Polynomial a = parse_poly(q[0], pres.table), b = parse_poly(q[1], pres.table), c = parse_poly(q[2], pres.table);
        CorrelatorResult r = three_point(fa, a, b, c);
        Json coeffs = Json::array();
        for (const Term& term : r.value.terms()) {
            std::vector<Exponent> beta(term.mono.exponents().begin() + static_cast<long>(inf),
                                       term.mono.exponents().begin() + static_cast<long>(inl));
            coeffs.push_back(Json{{"beta", beta}, {"value", to_string(instanton_coefficient(r, beta))}});
        }
        Json row{{"inputs", Json::array({q[0], q[1], q[2]})}, {"value", render(r.value)}, {"coefficients", coeffs}};
        s << "<" << q[0] << ", " << q[1] << ", " << q[2] << "> = " << row["value"].get<std::string>() << "\n";
        for (const auto& cf : coeffs)
            s << "  beta=(" << detail::join(cf["beta"], ",") << "): " << cf["value"].get<std::string>() << "\n";
        rows.push_back(std::move(row));
    }
    out.data["correlators"] = rows;
    out.text = s.str();
    return out;
}

inline CommandOutput run_pairing(const Job& job) {
    RingPresentation pres = job_presentation(job);
    FrobeniusAlgebra fa = job_frobenius(job, pres);
    GramMatrix g = gram_matrix(fa);
    CommandOutput out;
    out.data["command"] = "pairing";
    out.data["ring"] = pres.description;
    out.data["basis"] = detail::json_basis(fa.algebra);
    Json m = Json::array();
    for (const auto& row : g.entries) {
        Json r = Json::array();
        for (const Polynomial& e : row) r.push_back(render(e));
        m.push_back(std::move(r));
    }
    out.data["matrix"] = m;
    out.data["determinant"] = render(g.determinant);
    out.data["determinant_constant_term"] = to_string(g.constant_term);
    out.data["nondegenerate"] = g.nondegenerate;

    std::ostringstream s;
    s << "ring: " << pres.description << "\n";
    s << "basis: " << detail::join(out.data["basis"], ", ") << "\n";
    s << "gram matrix:\n";
    for (const auto& row : m) s << "  [" << detail::join(row, ", ") << "]\n";
    s << "determinant: " << out.data["determinant"].get<std::string>() << "\n";
    s << "determinant at q=0: " << out.data["determinant_constant_term"].get<std::string>() << "\n";
    s << "nondegenerate: " << (g.nondegenerate ? "true" : "false") << "\n";
    out.text = s.str();
    return out;
}

inline CommandOutput run_check(const Job& job) {
    ToricData toric = detail::job_toric(job);
    Json checks = Json::array();
    auto add = [&](const std::string& name, bool passed, const std::string& detail) {
        checks.push_back(Json{{"name", name}, {"passed", passed}, {"detail", detail}});
    };

    if (auto m = detail::job_matrix(job, toric)) {
        auto violations = validate_deformation(*m);
        std::string vd;
        for (const auto& v : violations)
            vd += (vd.empty() ? "" : "; ") + std::string("row ") + std::to_string(v.row) + " column " +
                  std::to_string(v.column) + ": " + v.reason;
        add("validate_deformation", violations.empty(), violations.empty() ? "ok" : vd);
        if (violations.empty()) {
            OmalousReport rep = check_omalous(toric, *m);
            add("omalous", rep.omalous(),
                "c1=" + render(rep.bundle.c1) + " c2=" + render(rep.bundle.c2) + " (tangent c1=" +
                    render(rep.tangent.c1) + " c2=" + render(rep.tangent.c2) + ")");
            auto bad = regularity_failures(toric, *m);
            std::string bd;
            for (const Monomial& g : bad) bd += (bd.empty() ? "" : ", ") + render(g, *toric.table);
            add("bundle_regularity", bad.empty(),
                bad.empty() ? "degeneracy locus inside the irrelevant locus" : "not in radical of minors: " + bd);
        } else {
            add("omalous", false, "skipped: invalid deformation matrix");
            add("bundle_regularity", false, "skipped: invalid deformation matrix");
        }
    } else {
        OmalousReport rep = check_omalous_twists(toric, job.twists);
        std::string d = "c1=" + render(rep.bundle.c1) + " c2=" + render(rep.bundle.c2) + " (tangent c1=" +
                        render(rep.tangent.c1) + " c2=" + render(rep.tangent.c2) + ")";
        if (!rep.c2_matches) d += "; condition c2(E)=c2(T) fails";
        if (!rep.det_matches) d += "; condition det E* = K fails";
        add("omalous", rep.omalous(), d);
    }

    RingPresentation pres = job_presentation(job);
    FrobeniusAlgebra fa = job_frobenius(job, pres);
    FrobeniusReport fr = frobenius_check(fa);
    add("frobenius", fr.ok(),
        fr.ok() ? std::to_string(fr.triples_checked) + " triples ok" : detail::join(Json(fr.failures), "; "));
    bool closed = closure_check(fa);
    add("closure", closed, closed ? "products close on the module basis" : "products leave the module basis");
    GramMatrix g = gram_matrix(fa);
    add("gram_nondegenerate", g.nondegenerate, "det at q=0: " + to_string(g.constant_term));

    CommandOutput out;
    out.data["command"] = "check";
    out.data["ring"] = pres.description;
    out.data["checks"] = checks;
    bool all = true;
    std::ostringstream s;
    s << "ring: " << pres.description << "\n";
    for (const auto& c : checks) {
        all = all && c["passed"].get<bool>();
        s << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": "
          << c["detail"].get<std::string>() << "\n";
    }
    out.data["all_passed"] = all;
    out.exit_code = all ? exit_ok : exit_check_failed;
    out.text = s.str();
    return out;
}

enum class LimitMode { classical, undeform };

inline CommandOutput run_limit(const Job& job, LimitMode mode) {
    RingPresentation source, limit, target;
    std::map<std::string, std::string> rename;
    std::optional<bool> at_parameters;
    if (mode == LimitMode::classical) {
        source = job_presentation(job);
        std::map<std::string, Rational> zero;
        for (const Variable& v : source.table->variables())
            if (v.block == Block::instanton) zero[v.name] = 0;
        limit = substitute(source, zero);
        target = job.bundle == BundleKind::deformation_p1p1 && job.ring != RingKind::quantum
                     ? sheaf_cohomology_p1p1(job.epsilon, job.gamma)
                     : classical_cohomology_products(job.dims);
    } else {
        if (job.ring != RingKind::qsc) throw invalid_input("limit undeform requires ring qsc");
        source = qsc_presentation_p1p1_symbolic();
        std::map<std::string, Rational> zero;
        for (const Variable& v : source.table->variables())
            if (v.block == Block::parameter) zero[v.name] = 0;
        limit = substitute(source, zero);
        target = quantum_cohomology_products({1, 1});
        rename = {{"psi", "H1"}, {"psit", "H2"}};
        at_parameters = presentations_isomorphic_by_renaming(job_presentation(job), target, rename);
    }
    bool iso = presentations_isomorphic_by_renaming(limit, target, rename);
    QuotientAlgebra qa = quotient_algebra(limit);

    CommandOutput out;
    out.data["command"] = "limit";
    out.data["mode"] = mode == LimitMode::classical ? "classical" : "undeform";
    out.data["source"] = source.description;
    out.data["limit_relations"] = detail::json_presentation(limit);
    out.data["target"] = target.description;
    out.data["target_relations"] = detail::json_presentation(target);
    Json ren = Json::object();
    for (const auto& [a, b] : rename) ren[a] = b;
    out.data["rename"] = ren;
    out.data["isomorphic"] = iso;
    if (at_parameters) out.data["isomorphic_at_given_parameters"] = *at_parameters;
    out.data["graded_dimensions"] = qa.graded_dimensions();

    std::ostringstream s;
    s << "limit (" << out.data["mode"].get<std::string>() << ") of " << source.description << "\n";
    s << detail::text_relations(out.data["limit_relations"]);
    s << "target: " << target.description << "\n";
    s << "target " << detail::text_relations(out.data["target_relations"]);
    if (!rename.empty()) {
        s << "rename:";
        for (const auto& [a, b] : rename) s << " " << a << "->" << b;
        s << "\n";
    }
    s << "isomorphic: " << (iso ? "true" : "false") << "\n";
    if (at_parameters) s << "isomorphic at given parameters: " << (*at_parameters ? "true" : "false") << "\n";
    s << "graded dimensions: " << detail::join(out.data["graded_dimensions"], " ") << "\n";
    out.text = s.str();
    out.exit_code = iso ? exit_ok : exit_check_failed;
    return out;
}

/// Prints the basis even when the staircase is infinite; that case exits 3.
inline CommandOutput run_gb(const Job& job) {
    RingPresentation pres = job_presentation(job);
    MonomialOrder order = MonomialOrder::block(*pres.table);
    GroebnerBasis gb = buchberger({pres.table, pres.relations, order});
    bool finite = generator_staircase(gb).has_value();
    CommandOutput out;
    out.data["command"] = "gb";
    out.data["ring"] = pres.description;
    out.data["order"] = "block(generator degrevlex, instanton degrevlex, parameter degrevlex)";
    Json els = Json::array();
    for (const Polynomial& g : gb.elements) els.push_back(render(g));
    out.data["basis"] = els;
    out.data["staircase_finite"] = finite;
    std::ostringstream s;
    s << "ring: " << pres.description << "\n";
    s << "groebner basis:\n";
    for (const auto& e : els) s << "  " << e.get<std::string>() << "\n";
    s << "staircase: " << (finite ? "finite" : "infinite (degenerate presentation)") << "\n";
    out.text = s.str();
    out.exit_code = finite ? exit_ok : exit_degenerate;
    return out;
}

}  // namespace qsc::cli

#pragma once

// Report assembly and serialization for the command-line front end. Input is
// a JSON document {"weights": [[r,r,r],[r,r,r],[r,r,r]]} whose rows are the
// x-step i = 1, 0, -1 and columns the y-step j = 1, 0, -1, each entry a
// rational string "p/q" or "p"; the centre is the raw stay-probability.
// Reports print every rational in canonical lowest terms, so identical
// inputs produce byte-identical output.

#include <iomanip>
#include <istream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "walkgroup/classify.hpp"
#include "walkgroup/qrt.hpp"
#include "walkgroup/weights.hpp"

namespace walkgroup {

struct ReportOptions {
    bool oracle = false;
    bool yellowbook = false;  // include the verbatim order-8 cofactor check
    int oracle_seeds = 16;
    std::uint64_t seed = 0;
};

struct Report {
    GroupOrderResult result;
    std::optional<OrbitEstimate> oracle;
    std::optional<std::string> oracle_error;
    std::optional<std::string> oracle_warning;
};

inline RawGrid read_grid_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw walk_error(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("weights"))
        throw walk_error(errc::parse_error, "expected an object with a \"weights\" key");
    const auto& rows = doc["weights"];
    if (!rows.is_array() || rows.size() != 3)
        throw walk_error(errc::parse_error, "\"weights\" must be a 3x3 array");
    RawGrid grid;
    for (std::size_t r = 0; r < 3; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 3)
            throw walk_error(errc::parse_error, "\"weights\" must be a 3x3 array");
        for (std::size_t c = 0; c < 3; ++c) {
            const auto& cell = rows[r][c];
            if (cell.is_string())
                grid[r][c] = cell.get<std::string>();
            else if (cell.is_number_integer())
                grid[r][c] = std::to_string(cell.get<long long>());
            else
                throw walk_error(errc::parse_error,
                                 "weight entries must be rational strings");
        }
    }
    return grid;
}

inline Report build_report(const WeightMatrix& w, const ReportOptions& options = {}) {
    Report rep;
    ClassifyOptions copts;
    copts.yellowbook_order8 = options.yellowbook;
    rep.result = classify(w, copts);
    if (options.oracle && rep.result.genus && rep.result.genus->one) {
        try {
            rep.oracle = estimate_orbit_order(w, options.oracle_seeds, mazur_max_order,
                                              options.seed);
            const bool finite = rep.result.verdict == Verdict::finite;
            const bool agrees = finite
                ? (rep.oracle->closure_order && *rep.oracle->closure_order == *rep.result.omega3_order)
                : !rep.oracle->closure_order;
            if (!agrees)
                rep.oracle_warning =
                    "orbit estimate disagrees with the exact classification";
        } catch (const walk_error& err) {
            rep.oracle_error = err.what();
        }
    }
    return rep;
}

namespace detail {

template <typename Coeffs>
nlohmann::json rational_list(const Coeffs& coeffs) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& v : coeffs) out.push_back(to_string(v));
    return out;
}

}  // namespace detail

inline nlohmann::json report_to_json(const Report& rep) {
    const GroupOrderResult& r = rep.result;
    nlohmann::json j;
    {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : r.weights.grid) rows.push_back(detail::rational_list(row));
        j["weights"] = std::move(rows);
    }
    j["verdict"] = r.verdict == Verdict::finite ? "finite"
                 : r.verdict == Verdict::infinite ? "infinite" : "degenerate";
    if (r.reason) j["degenerate_reason"] = degenerate_reason_name(*r.reason);
    j["det_p"] = to_string(r.det_p_value);
    if (r.kernel) {
        const KernelData& k = *r.kernel;
        j["kernel"] = {{"a", detail::rational_list(k.a)},
                       {"b", detail::rational_list(k.b)},
                       {"c", detail::rational_list(k.c)},
                       {"a_tilde", detail::rational_list(k.a_tilde)},
                       {"b_tilde", detail::rational_list(k.b_tilde)},
                       {"c_tilde", detail::rational_list(k.c_tilde)}};
        j["delta1"] = detail::rational_list(k.delta1);
        j["delta2"] = detail::rational_list(k.delta2);
        j["invariants"] = {{"D", to_string(k.eisenstein_d)},
                           {"E", to_string(k.eisenstein_e)},
                           {"g2", to_string(r.curve->g2)},
                           {"g3", to_string(r.curve->g3)},
                           {"disc", to_string(r.curve->disc)}};
    }
    if (r.genus) {
        j["genus"] = r.genus->one ? "one" : "zero-degenerate";
        if (!r.genus->one) {
            nlohmann::json reasons = nlohmann::json::array();
            if (r.genus->disc_zero) reasons.push_back("disc-zero");
            if (r.genus->delta1_repeated) reasons.push_back("delta1-multiple-root");
            if (r.genus->delta2_repeated) reasons.push_back("delta2-multiple-root");
            j["genus_reasons"] = std::move(reasons);
        }
    }
    if (r.omega3) {
        j["base_point"] = {{"x", to_string(r.omega3->x)}, {"y", to_string(r.omega3->y)}};
        j["on_curve"] = r.omega3_on_curve;
    }
    if (r.torsion) {
        if (r.torsion->infinite()) {
            j["omega3_order"] = "infinite";
            j["group_order"] = "infinite";
        } else {
            j["omega3_order"] = *r.torsion->order;
            j["group_order"] = *r.group_order;
        }
    }
    if (r.criteria) {
        const CriteriaRecord& c = *r.criteria;
        nlohmann::json crit{{"order4_det_p", c.order4_det_p},
                            {"order6_psi3", c.order6_psi3},
                            {"order8_psi4", c.order8_psi4},
                            {"order6_det_paper", to_string(c.order6_det_paper)},
                            {"order6_det_hessian", to_string(c.order6_det_hessian)},
                            {"order8_sextic_paper", to_string(c.order8_sextic_paper_value)},
                            {"order8_sextic_weierstrass",
                             to_string(c.order8_sextic_weierstrass_value)},
                            {"yellowbook_order6", c.yellowbook_order6},
                            {"yellowbook_order6_det", to_string(c.yellowbook_order6_det)}};
        if (c.yellowbook_order8_det) {
            crit["yellowbook_order8"] = (*c.yellowbook_order8_det == 0);
            crit["yellowbook_order8_det"] = to_string(*c.yellowbook_order8_det);
        }
        j["criteria"] = std::move(crit);
    }
    if (rep.oracle) {
        const OrbitEstimate& o = *rep.oracle;
        nlohmann::json jo{{"seeds_total", o.seeds_total},
                          {"seeds_usable", o.seeds_usable},
                          {"seeds_agreeing", o.seeds_agreeing},
                          {"residual", o.residual}};
        if (o.closure_order)
            jo["closure_order"] = *o.closure_order;
        else
            jo["closure_order"] = "none";
        if (rep.oracle_warning) jo["warning"] = *rep.oracle_warning;
        j["oracle"] = std::move(jo);
    }
    if (rep.oracle_error) j["oracle_error"] = *rep.oracle_error;
    return j;
}

inline std::string report_to_text(const Report& rep) {
    const GroupOrderResult& r = rep.result;
    std::ostringstream out;
    auto line = [&](const std::string& key, const std::string& value) {
        out << std::left << std::setw(22) << key << value << "\n";
    };
    out << "weights (rows i=1,0,-1; cols j=1,0,-1)\n";
    for (const auto& row : r.weights.grid) {
        out << " ";
        for (const auto& v : row) out << " " << std::setw(10) << to_string(v);
        out << "\n";
    }
    if (r.kernel) {
        const KernelData& k = *r.kernel;
        auto vec = [](const auto& coeffs) {
            std::string s = "[";
            bool first = true;
            for (const Rational& v : coeffs) {
                if (!first) s += ", ";
                s += to_string(v);
                first = false;
            }
            return s + "]";
        };
        line("a | b | c", vec(k.a) + " | " + vec(k.b) + " | " + vec(k.c));
        line("~a | ~b | ~c", vec(k.a_tilde) + " | " + vec(k.b_tilde) + " | " + vec(k.c_tilde));
        line("delta1", vec(k.delta1));
        line("delta2", vec(k.delta2));
        line("D, E", to_string(k.eisenstein_d) + ", " + to_string(k.eisenstein_e));
        line("g2, g3", to_string(r.curve->g2) + ", " + to_string(r.curve->g3));
        line("disc", to_string(r.curve->disc));
    }
    line("det P", to_string(r.det_p_value));
    if (r.genus) line("genus", r.genus->one ? "one" : "zero-degenerate");
    if (r.omega3) {
        line("Omega3", "(" + to_string(r.omega3->x) + ", " + to_string(r.omega3->y) + ")");
        line("on curve", r.omega3_on_curve ? "yes" : "no");
    }
    if (r.torsion) {
        line("ord(Omega3)", r.torsion->infinite() ? "infinite"
                                                  : std::to_string(*r.torsion->order));
    }
    switch (r.verdict) {
        case Verdict::finite:
            line("group order |H|", std::to_string(*r.group_order));
            break;
        case Verdict::infinite:
            line("group order |H|", "infinite");
            break;
        case Verdict::degenerate:
            line("verdict", std::string("degenerate (") +
                                degenerate_reason_name(*r.reason) + ")");
            break;
    }
    if (r.criteria) {
        const CriteriaRecord& c = *r.criteria;
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        line("order-4 (det P)", yn(c.order4_det_p));
        line("order-6 (Psi3)", yn(c.order6_psi3));
        line("order-8 (Psi4)", yn(c.order8_psi4));
        line("order-6 det paper", to_string(c.order6_det_paper));
        line("order-6 det hessian", to_string(c.order6_det_hessian));
        line("order-8 sextic paper", to_string(c.order8_sextic_paper_value));
        line("order-8 sextic weier", to_string(c.order8_sextic_weierstrass_value));
        line("yellowbook order-6", yn(c.yellowbook_order6) + std::string(" (det ") +
                                       to_string(c.yellowbook_order6_det) + ")");
        if (c.yellowbook_order8_det)
            line("yellowbook order-8", std::string(*c.yellowbook_order8_det == 0 ? "yes" : "no") +
                                           " (det " + to_string(*c.yellowbook_order8_det) +
                                           ", as printed; suspected misprint)");
    }
    if (rep.oracle) {
        const OrbitEstimate& o = *rep.oracle;
        std::string s = o.closure_order ? std::to_string(*o.closure_order) : "none";
        s += " (" + std::to_string(o.seeds_agreeing) + "/" + std::to_string(o.seeds_usable) +
             " seeds)";
        line("orbit closure", s);
        if (rep.oracle_warning) line("oracle warning", *rep.oracle_warning);
    }
    if (rep.oracle_error) line("oracle error", *rep.oracle_error);
    return out.str();
}

}  // namespace walkgroup

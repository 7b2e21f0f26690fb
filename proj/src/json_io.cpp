#include "ene/json_io.hpp"

#include "ene/euler.hpp"

namespace ene {

using nlohmann::json;

json scalar_json(const GaussianRational& s) {
    if (s.is_real()) return s.real().to_string();
    return json{{"re", s.real().to_string()}, {"im", s.imag().to_string()}};
}

json poly_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(scalar_json(c));
    return a;
}

json rational_function_json(const RationalFunction& r) {
    return json{{"num", poly_json(r.num())}, {"den", poly_json(r.den())}, {"display", r.to_string()}};
}

json series_json(const LaurentSeries& s) {
    json coeffs = json::array();
    for (int k = s.low(); k <= s.high(); ++k) coeffs.push_back(scalar_json(s.coeff(k)));
    return json{{"low", s.low()}, {"high", s.high()}, {"coeffs", coeffs}, {"display", s.to_string()}};
}

json root_divisor_json(const RootDivisor& d) {
    json a = json::array();
    for (const auto& [root, mult] : d.entries())
        a.push_back(json{{"root", scalar_json(root)}, {"mult", mult}});
    return a;
}

json sphere_point_json(const SpherePoint& p) {
    if (p.infinite) return "inf";
    return scalar_json(p.value);
}

json transalg_divisor_json(const TransalgebraicDivisor& d) {
    json alg = json::array();
    for (const auto& [p, m] : d.algebraic)
        alg.push_back(json{{"point", sphere_point_json(p)}, {"mult", m}});
    json tr = json::array();
    for (const auto& [p, m] : d.transcendental)
        tr.push_back(json{{"point", sphere_point_json(p)}, {"order", m}});
    return json{{"algebraic", alg}, {"transcendental", tr}};
}

json transalg_json(const TransalgebraicFunction& f) {
    json out{{"rational_part", rational_function_json(f.rational_part())},
             {"exponent_part", rational_function_json(f.exponent_part())}};
    out["divisor"] = transalg_divisor_json(transalg_divisor(f));
    return out;
}

json symbol_json(const EneSymbol& s) {
    return json{{"order", s.order},
                {"parameter", scalar_json(s.parameter)},
                {"weight", scalar_json(s.weight)},
                {"symbol_kind", s.kind()}};
}

json eval_value_json(const EvalValue& v) {
    if (std::holds_alternative<RationalFunction>(v)) {
        json out = rational_function_json(std::get<RationalFunction>(v));
        out["kind"] = "rational";
        return out;
    }
    if (std::holds_alternative<SeriesValue>(v)) {
        const SeriesValue& s = std::get<SeriesValue>(v);
        json out = series_json(s.body);
        out["kind"] = "series";
        if (s.has_principal) out["principal_exponent"] = series_json(s.principal);
        return out;
    }
    if (std::holds_alternative<TransalgebraicFunction>(v)) {
        json out = transalg_json(std::get<TransalgebraicFunction>(v));
        out["kind"] = "transalgebraic";
        return out;
    }
    json out = symbol_json(std::get<EneSymbol>(v));
    out["kind"] = "symbol";
    return out;
}

json euler_table_json(int max_k) {
    json rows = json::array();
    for (const auto& row : euler_table(max_k)) {
        json coeffs = json::array();
        for (const auto& c : row.numerator.coefficients()) coeffs.push_back(scalar_json(c));
        rows.push_back(json{{"k", row.k},
                            {"numerator", coeffs},
                            {"closed_form", rational_function_json(row.closed_form)["display"]}});
    }
    return json{{"rows", rows}};
}

json verify_report_json(const VerifyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
}

json convergence_report_json(const ConvergenceReport& r) {
    return json{{"k", r.ks},
                {"sup_error", r.errors},
                {"support_hausdorff", r.hausdorff},
                {"decay_exponent", r.decay_exponent}};
}

namespace {

json approx_point_json(const ApproxSpherePoint& p) {
    if (p.infinite) return "inf";
    return json{{"re", p.value.real()}, {"im", p.value.imag()}};
}

}  // namespace

json collapse_report_json(const CollapseReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json zeros = json::array();
        for (const auto& c : w.zeros)
            zeros.push_back(json{{"location", approx_point_json(c.location)},
                                 {"multiplicity", c.multiplicity},
                                 {"distance", c.distance}});
        json poles = json::array();
        for (const auto& c : w.poles)
            poles.push_back(json{{"location", approx_point_json(c.location)},
                                 {"multiplicity", c.multiplicity},
                                 {"distance", c.distance}});
        witnesses.push_back(json{{"singularity", sphere_point_json(w.singularity)},
                                 {"order", w.order},
                                 {"zeros", zeros},
                                 {"poles", poles},
                                 {"distinct_locations", w.distinct_locations()}});
    }
    return json{{"k", r.k}, {"witnesses", witnesses}};
}

}  // namespace ene

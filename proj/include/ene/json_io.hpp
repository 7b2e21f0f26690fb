#pragma once

#include <nlohmann/json.hpp>

#include "ene/expr.hpp"
#include "ene/limits.hpp"
#include "ene/verify.hpp"

namespace ene {

/// Scalars: real values render as "p/q" strings, complex ones as
/// {"re": "p/q", "im": "p/q"}.
nlohmann::json scalar_json(const GaussianRational& s);

/// Lowest-first coefficient array.
nlohmann::json poly_json(const Poly& p);

nlohmann::json rational_function_json(const RationalFunction& r);

/// {"low", "high", "coeffs"} with coeffs from low to high.
nlohmann::json series_json(const LaurentSeries& s);

/// [{"root": scalar, "mult": n}, ...]
nlohmann::json root_divisor_json(const RootDivisor& d);

/// finite points as scalars, infinity as "inf"
nlohmann::json sphere_point_json(const SpherePoint& p);

nlohmann::json transalg_divisor_json(const TransalgebraicDivisor& d);

nlohmann::json transalg_json(const TransalgebraicFunction& f);

nlohmann::json symbol_json(const EneSymbol& s);

/// Tagged by "kind": rational | series | transalgebraic | symbol.
nlohmann::json eval_value_json(const EvalValue& v);

nlohmann::json euler_table_json(int max_k);

nlohmann::json verify_report_json(const VerifyReport& r);

nlohmann::json convergence_report_json(const ConvergenceReport& r);

nlohmann::json collapse_report_json(const CollapseReport& r);

}  // namespace ene

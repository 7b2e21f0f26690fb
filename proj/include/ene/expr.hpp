#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ene/series.hpp"
#include "ene/transalg.hpp"

namespace ene {

enum class ExprKind {
    Scalar,    // literal in Q(i)
    Variable,  // z
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,       // args: base, exponent (exponent must evaluate to an integer)
    Exp,       // exp(x)
    EulerGen,  // R(k, z0)
    Polylog,   // Li(k)
    Ene,       // ene(a, b)
    SymbolAtInf  // zinf(m, z0)
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    int line = 1;
    int column = 1;
    GaussianRational scalar;  // ExprKind::Scalar only
    std::vector<ExprPtr> args;
};

/// Grammar: + - over * / over unary - over ^ over atoms; atoms are integer
/// literals (optionally i-suffixed), z, i, parenthesized expressions and the
/// calls exp(x), R(k,z0), Li(k), ene(a,b), zinf(m,z0).
/// Throws ParseError with 1-based line/column on bad input.
ExprPtr parse_expression(const std::string& text);

/// Deterministic text form; parse(render(e)) reproduces e node for node.
std::string render_expression(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// A series-valued result. `principal` carries the negative-index part of a
/// product exponent when an eñe product met an exponential singularity at 0;
/// such a value is terminal (no further arithmetic).
struct SeriesValue {
    LaurentSeries body;
    LaurentSeries principal;
    bool has_principal = false;

    SeriesValue() : body(LaurentSeries::zero(0)), principal(LaurentSeries::zero(0)) {}
    explicit SeriesValue(LaurentSeries b)
        : body(std::move(b)), principal(LaurentSeries::zero(0)) {}
    SeriesValue(LaurentSeries b, LaurentSeries p, bool has)
        : body(std::move(b)), principal(std::move(p)), has_principal(has) {}
};

using EvalValue = std::variant<RationalFunction, SeriesValue, TransalgebraicFunction, EneSymbol>;

struct EvalOptions {
    int order = 16;
};

/// Evaluates with exact arithmetic. Series appear as soon as a subexpression
/// has no rational closed form (Li, R with k <= 0, exp of a series, ene).
EvalValue evaluate(const ExprPtr& e, const EvalOptions& options);

/// Expansion of an already-evaluated value at 0 through `order`. Errors when
/// the value has no exact series there (e.g. a transalgebraic function whose
/// exponent does not vanish at 0).
LaurentSeries value_series(const EvalValue& v, int order);

/// Exponent of v at 0 modulo constants: what the eñe product consumes.
LaurentSeries value_exponent_series(const EvalValue& v, int order);

/// v as a transalgebraic function. Errors for series values and for symbols
/// of nonpositive order (no rational-exponent form).
TransalgebraicFunction value_transalg(const EvalValue& v);

}  // namespace ene

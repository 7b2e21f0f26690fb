#include "ene/error.hpp"
#include "ene/euler.hpp"
#include "ene/expr.hpp"

namespace ene {
namespace {

constexpr long kIndexCap = 4096;
constexpr long kPowerCap = 65536;

bool is_trans(const EvalValue& v) { return std::holds_alternative<TransalgebraicFunction>(v); }
bool is_sym(const EvalValue& v) { return std::holds_alternative<EneSymbol>(v); }
bool is_rat(const EvalValue& v) { return std::holds_alternative<RationalFunction>(v); }
bool is_ser(const EvalValue& v) { return std::holds_alternative<SeriesValue>(v); }

const LaurentSeries& plain_series(const EvalValue& v) {
    const SeriesValue& s = std::get<SeriesValue>(v);
    if (s.has_principal)
        throw Error("value with a principal exponent part cannot enter further arithmetic");
    return s.body;
}

/// Symbols with positive order are honest transalgebraic functions; order 0
/// with integer weight is plain rational. Everything else stays symbolic.
TransalgebraicFunction symbol_to_transalg(const EneSymbol& s) {
    if (s.order >= 1) {
        if (s.order > kIndexCap) throw Error("symbol order too large");
        return TransalgebraicFunction(
            RationalFunction(1),
            RationalFunction(s.weight) * euler_r(static_cast<int>(s.order)).rescaled_argument(s.parameter));
    }
    if (s.order == 0 && s.weight.is_real() && s.weight.real().is_integer()) {
        mpz_class w = s.weight.real().numerator();
        if (!w.fits_slong_p()) throw Error("symbol weight too large");
        Poly factor{GaussianRational(1), -s.parameter.inverse()};  // 1 - z/u
        return TransalgebraicFunction(RationalFunction(factor).pow(w.get_si()));
    }
    throw Error("symbol of kind " + s.kind() + " has no rational-exponent form");
}

GaussianRational constant_of(const EvalValue& v, const char* what) {
    if (!is_rat(v)) throw Error(std::string("expected a constant ") + what);
    const RationalFunction& r = std::get<RationalFunction>(v);
    if (!r.is_constant()) throw Error(std::string("expected a constant ") + what);
    return r.num().coeff(0) / r.den().coeff(0);
}

long integer_of(const EvalValue& v, long cap) {
    GaussianRational s = constant_of(v, "index argument");
    if (!s.is_real() || !s.real().is_integer()) throw Error("non-integer index argument");
    mpz_class n = s.real().numerator();
    if (!n.fits_slong_p() || n > cap || n < -cap) throw Error("index argument out of range");
    return n.get_si();
}

LaurentSeries series_pow(const LaurentSeries& s, long e) {
    if (e == 0) return LaurentSeries::one(s.high());
    LaurentSeries base = e < 0 ? s.inverse() : s;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    LaurentSeries acc = base;
    --k;
    while (k != 0) {
        acc = acc * base;
        --k;
    }
    return acc;
}

struct Evaluator {
    const EvalOptions& options;

    EvalValue eval(const ExprPtr& e) {
        switch (e->kind) {
            case ExprKind::Scalar:
                return RationalFunction(e->scalar);
            case ExprKind::Variable:
                return RationalFunction::variable();
            case ExprKind::Add:
                return add(eval(e->args[0]), eval(e->args[1]), false);
            case ExprKind::Sub:
                return add(eval(e->args[0]), eval(e->args[1]), true);
            case ExprKind::Mul:
                return mul(eval(e->args[0]), eval(e->args[1]));
            case ExprKind::Div:
                return div(eval(e->args[0]), eval(e->args[1]));
            case ExprKind::Neg:
                return neg(eval(e->args[0]));
            case ExprKind::Pow:
                return pow(eval(e->args[0]), integer_of(eval(e->args[1]), kPowerCap));
            case ExprKind::Exp:
                return exp_value(eval(e->args[0]));
            case ExprKind::EulerGen: {
                long k = integer_of(eval(e->args[0]), kIndexCap);
                GaussianRational z0 = constant_of(eval(e->args[1]), "base point");
                if (z0.is_zero()) throw Error("generator location must be nonzero");
                if (k >= 1)
                    return euler_r(static_cast<int>(k)).rescaled_argument(z0);
                return EvalValue(SeriesValue(euler_r_series(static_cast<int>(k), options.order).rescaled(z0)));
            }
            case ExprKind::Polylog: {
                long k = integer_of(eval(e->args[0]), kIndexCap);
                return EvalValue(SeriesValue(polylog_series(static_cast<int>(k), options.order)));
            }
            case ExprKind::SymbolAtInf: {
                long m = integer_of(eval(e->args[0]), kIndexCap);
                if (m == 0) throw Error("symbol order must be nonzero");
                GaussianRational z0 = constant_of(eval(e->args[1]), "base point");
                if (z0.is_zero()) throw Error("symbol base point must be nonzero");
                // stored parameter is z0^m: the rescale the exponent actually uses
                return EneSymbol{m, z0.pow(m), GaussianRational(1)};
            }
            case ExprKind::Ene: {
                EvalValue a = eval(e->args[0]);
                EvalValue b = eval(e->args[1]);
                if (is_sym(a) && is_sym(b))
                    return ene_symbols(std::get<EneSymbol>(a), std::get<EneSymbol>(b));
                LaurentSeries f = value_exponent_series(a, options.order);
                LaurentSeries g = value_exponent_series(b, options.order);
                LaurentSeries h = ene_exp(f, g);
                return EvalValue(SeriesValue(h.regular_part().exp(), h.principal_part(),
                                             h.has_principal_part()));
            }
        }
        throw Error("unhandled expression node");
    }

    EvalValue add(EvalValue a, EvalValue b, bool subtract) {
        if (is_sym(a)) a = symbol_to_transalg(std::get<EneSymbol>(a));
        if (is_sym(b)) b = symbol_to_transalg(std::get<EneSymbol>(b));
        if (is_trans(a) || is_trans(b))
            throw Error("addition of transalgebraic values leaves the class");
        if (is_rat(a) && is_rat(b)) {
            const RationalFunction& x = std::get<RationalFunction>(a);
            const RationalFunction& y = std::get<RationalFunction>(b);
            return subtract ? x - y : x + y;
        }
        LaurentSeries x = to_series(a);
        LaurentSeries y = to_series(b);
        return EvalValue(SeriesValue(subtract ? x - y : x + y));
    }

    EvalValue mul(EvalValue a, EvalValue b) {
        if (is_sym(a) && is_sym(b)) {
            const EneSymbol& x = std::get<EneSymbol>(a);
            const EneSymbol& y = std::get<EneSymbol>(b);
            if (x.order == y.order && x.parameter == y.parameter)
                return EneSymbol{x.order, x.parameter, x.weight + y.weight};
        }
        if (is_sym(a)) a = symbol_to_transalg(std::get<EneSymbol>(a));
        if (is_sym(b)) b = symbol_to_transalg(std::get<EneSymbol>(b));
        if (is_trans(a) || is_trans(b)) {
            if (is_ser(a) || is_ser(b)) throw Error("cannot mix series and transalgebraic values");
            TransalgebraicFunction x = as_trans(a);
            TransalgebraicFunction y = as_trans(b);
            return x * y;
        }
        if (is_rat(a) && is_rat(b)) return std::get<RationalFunction>(a) * std::get<RationalFunction>(b);
        return EvalValue(SeriesValue(to_series(a) * to_series(b)));
    }

    EvalValue div(EvalValue a, EvalValue b) {
        if (is_sym(b)) {
            EneSymbol inv = std::get<EneSymbol>(b);
            inv.weight = -inv.weight;
            return mul(std::move(a), inv);
        }
        if (is_trans(b)) return mul(std::move(a), std::get<TransalgebraicFunction>(b).inverse());
        if (is_rat(b)) {
            const RationalFunction& y = std::get<RationalFunction>(b);
            if (y.is_zero()) throw Error("division by zero");
            if (is_rat(a)) return std::get<RationalFunction>(a) / y;
            return mul(std::move(a), y.inverse());
        }
        return mul(std::move(a), EvalValue(SeriesValue(plain_series(b).inverse())));
    }

    EvalValue neg(EvalValue a) {
        if (is_sym(a)) a = symbol_to_transalg(std::get<EneSymbol>(a));
        if (is_rat(a)) return -std::get<RationalFunction>(a);
        if (is_trans(a)) {
            const TransalgebraicFunction& t = std::get<TransalgebraicFunction>(a);
            return TransalgebraicFunction(RationalFunction(-1) * t.rational_part(), t.exponent_part());
        }
        return EvalValue(SeriesValue(-plain_series(a)));
    }

    EvalValue pow(EvalValue a, long e) {
        if (is_sym(a)) {
            EneSymbol s = std::get<EneSymbol>(a);
            s.weight *= GaussianRational(Rational(e));
            return s;
        }
        if (is_rat(a)) return std::get<RationalFunction>(a).pow(e);
        if (is_trans(a)) return std::get<TransalgebraicFunction>(a).pow(e);
        return EvalValue(SeriesValue(series_pow(plain_series(a), e)));
    }

    EvalValue exp_value(const EvalValue& a) {
        if (is_rat(a)) return TransalgebraicFunction(RationalFunction(1), std::get<RationalFunction>(a));
        if (is_ser(a)) return EvalValue(SeriesValue(plain_series(a).exp()));
        throw Error("exp of a transalgebraic or symbol value");
    }

    TransalgebraicFunction as_trans(const EvalValue& v) {
        if (is_trans(v)) return std::get<TransalgebraicFunction>(v);
        if (is_rat(v)) return TransalgebraicFunction(std::get<RationalFunction>(v));
        if (is_sym(v)) return symbol_to_transalg(std::get<EneSymbol>(v));
        throw Error("cannot mix series and transalgebraic values");
    }

    LaurentSeries to_series(const EvalValue& v) { return value_series(v, options.order); }
};

}  // namespace

EvalValue evaluate(const ExprPtr& e, const EvalOptions& options) {
    if (options.order < 0) throw Error("negative truncation order");
    return Evaluator{options}.eval(e);
}

LaurentSeries value_series(const EvalValue& v, int order) {
    if (is_rat(v)) return series_of_rational(std::get<RationalFunction>(v), order);
    if (is_ser(v)) {
        const SeriesValue& s = std::get<SeriesValue>(v);
        if (s.has_principal)
            throw Error("value with a principal exponent part has no power series form");
        return s.body;
    }
    if (is_sym(v)) return std::get<EneSymbol>(v).expand(order).series();
    const TransalgebraicFunction& t = std::get<TransalgebraicFunction>(v);
    LaurentSeries base = series_of_rational(t.rational_part(), order);
    if (t.exponent_part().is_zero()) return base;
    LaurentSeries es = series_of_rational(t.exponent_part(), order);
    if (!es.coeff(0).is_zero())
        throw Error("transalgebraic series has a transcendental constant factor");
    return base * es.exp();
}

LaurentSeries value_exponent_series(const EvalValue& v, int order) {
    if (is_rat(v))
        return transalg_exponent_series(TransalgebraicFunction(std::get<RationalFunction>(v)), order);
    if (is_trans(v)) return transalg_exponent_series(std::get<TransalgebraicFunction>(v), order);
    if (is_sym(v)) return std::get<EneSymbol>(v).exponent_series(order);
    const SeriesValue& s = std::get<SeriesValue>(v);
    if (s.has_principal) throw Error("value with a principal exponent part cannot be an operand");
    GaussianRational c0 = s.body.coeff(0);
    if (c0.is_zero() || s.body.has_principal_part())
        throw Error("unsupported representative: algebraic divisor meets 0");
    return (c0.inverse() * s.body).log();
}

TransalgebraicFunction value_transalg(const EvalValue& v) {
    if (is_rat(v)) return TransalgebraicFunction(std::get<RationalFunction>(v));
    if (is_trans(v)) return std::get<TransalgebraicFunction>(v);
    if (is_sym(v)) return symbol_to_transalg(std::get<EneSymbol>(v));
    throw Error("series value has no transalgebraic closed form");
}

}  // namespace ene

#include "ene/euler.hpp"

#include <sstream>

#include "ene/error.hpp"

namespace ene {

Poly euler_numerator(int k) {
    if (k < 1) throw Error("euler numerator index must be >= 1");
    Poly p = Poly::one();
    Poly z = Poly::variable();
    Poly one_minus_z{GaussianRational(1), GaussianRational(-1)};
    for (int j = 1; j < k; ++j) {
        // P_{j+1} = (1 + (j-1) z) P_j + z (1-z) P_j'
        Poly a{GaussianRational(1), GaussianRational(Rational(j - 1))};
        p = a * p + z * one_minus_z * p.derivative();
    }
    return p;
}

RationalFunction euler_r(int k) {
    if (k < 1) throw Error("euler function index must be >= 1");
    Poly num = GaussianRational(-1) * (Poly::variable() * euler_numerator(k));
    Poly one_minus_z{GaussianRational(1), GaussianRational(-1)};
    return RationalFunction(num, one_minus_z.pow(static_cast<unsigned>(k)));
}

LaurentSeries euler_r_series(int k, int order) {
    LaurentSeries s = LaurentSeries::zero(order);
    for (long n = 1; n <= order; ++n)
        s.set_coeff(static_cast<int>(n), GaussianRational(-Rational(n).pow(k - 1)));
    return s;
}

LaurentSeries polylog_series(int k, int order) {
    if (k < 1) throw Error("polylog index must be >= 1");
    LaurentSeries s = LaurentSeries::zero(order);
    for (long n = 1; n <= order; ++n)
        s.set_coeff(static_cast<int>(n), GaussianRational(Rational(n).pow(-k)));
    return s;
}

bool inversion_symmetric(const RationalFunction& r, int k) {
    RationalFunction sign = k % 2 == 0 ? RationalFunction(1) : RationalFunction(-1);
    return r.substitute_inverse() == sign * r;
}

bool check_functional_equation(int k) {
    if (k < 2) throw Error("functional equation requires index >= 2");
    return inversion_symmetric(euler_r(k), k);
}

std::vector<EulerTableRow> euler_table(int max_k) {
    if (max_k < 1) throw Error("table needs at least one row");
    std::vector<EulerTableRow> rows;
    rows.reserve(static_cast<std::size_t>(max_k));
    for (int k = 1; k <= max_k; ++k) rows.push_back({k, euler_numerator(k), euler_r(k)});
    return rows;
}

namespace {

std::string closed_form_display(const EulerTableRow& row) {
    std::ostringstream os;
    os << "-z";
    if (row.numerator != Poly::one()) os << "(" << row.numerator.to_string() << ")";
    os << "/(1-z)";
    if (row.k != 1) os << "^" << row.k;
    return os.str();
}

}  // namespace

std::string render_euler_table(int max_k) {
    std::ostringstream os;
    os << "k\tP_k coefficients\tR_k(z)\n";
    for (const auto& row : euler_table(max_k)) {
        os << row.k << "\t";
        const auto& c = row.numerator.coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j].to_string();
        os << "\t" << closed_form_display(row) << "\n";
    }
    return os.str();
}

}  // namespace ene

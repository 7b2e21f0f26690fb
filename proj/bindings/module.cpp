// Thin JSON-over-string bridge. Values cross the boundary as serialized JSON
// so the Python side stays a pure-stdlib wrapper; all math stays in ene_core.

#include <pybind11/pybind11.h>

#include <memory>
#include <string>

#include "ene/ene_product.hpp"
#include "ene/error.hpp"
#include "ene/euler.hpp"
#include "ene/expr.hpp"
#include "ene/json_io.hpp"
#include "ene/limits.hpp"
#include "ene/verify.hpp"

namespace py = pybind11;

namespace {

ene::EvalValue eval_text(const std::string& text, int order) {
    ene::EvalOptions opt;
    opt.order = order;
    return ene::evaluate(ene::parse_expression(text), opt);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact ene-product calculator core";
    m.attr("__version__") = "0.1.0";

    // Error first, ParseError second: translators run newest-first, so the
    // derived class is matched before the base swallows it.
    auto err = py::register_exception<ene::Error>(m, "EneError");
    py::register_exception<ene::ParseError>(m, "EneParseError", err.ptr());

    m.def(
        "eval_json",
        [](const std::string& text, int order) {
            return ene::eval_value_json(eval_text(text, order)).dump();
        },
        py::arg("text"), py::arg("order") = 16);

    m.def(
        "series_json",
        [](const std::string& text, int order) {
            return ene::series_json(ene::value_series(eval_text(text, order), order)).dump();
        },
        py::arg("text"), py::arg("order") = 16);

    m.def(
        "ene_json",
        [](const std::string& left, const std::string& right, int order) {
            auto node = std::make_shared<ene::Expr>();
            node->kind = ene::ExprKind::Ene;
            node->args = {ene::parse_expression(left), ene::parse_expression(right)};
            ene::EvalOptions opt;
            opt.order = order;
            return ene::eval_value_json(ene::evaluate(node, opt)).dump();
        },
        py::arg("left"), py::arg("right"), py::arg("order") = 16);

    m.def(
        "render",
        [](const std::string& text) {
            return ene::render_expression(ene::parse_expression(text));
        },
        py::arg("text"));

    m.def("euler_table_text", &ene::render_euler_table, py::arg("max_k"));

    m.def(
        "euler_table_json",
        [](int max_k) { return ene::euler_table_json(max_k).dump(); },
        py::arg("max_k"));

    m.def(
        "verify_json",
        [](const std::string& suite, int order, int max_k, int trials, std::uint64_t seed) {
            ene::VerifyOptions opt;
            opt.order = order;
            opt.max_k = max_k;
            opt.trials = trials;
            opt.seed = seed;
            return ene::verify_report_json(ene::run_verify_suite(suite, opt)).dump();
        },
        py::arg("suite"), py::arg("order") = 12, py::arg("max_k") = 12, py::arg("trials") = 100,
        py::arg("seed") = 20260817ULL);

    m.def(
        "limit_json",
        [](const std::string& text, long k_min, long k_max, const std::string& grid,
           double exclusion) {
            if (k_min < 1 || k_max < k_min) throw ene::Error("need 1 <= kmin <= kmax");
            ene::TransalgebraicFunction f = ene::value_transalg(eval_text(text, 16));
            ene::SampleRegion region = ene::parse_sample_grid(grid, exclusion);
            return ene::convergence_report_json(ene::euler_limit_study(f, region, k_min, k_max))
                .dump();
        },
        py::arg("text"), py::arg("k_min") = 8, py::arg("k_max") = 256,
        py::arg("grid") = "circle:0,0,0.5,64", py::arg("exclusion") = 0.1);

    m.def(
        "collapse_json",
        [](const std::string& text, long k) {
            ene::TransalgebraicFunction f = ene::value_transalg(eval_text(text, 16));
            return ene::collapse_report_json(ene::collapse_witness(f, k)).dump();
        },
        py::arg("text"), py::arg("k"));
}

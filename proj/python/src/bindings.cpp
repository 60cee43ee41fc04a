#include "confrac/conformable_calc.hpp"
#include "confrac/errors.hpp"
#include "confrac/hermite.hpp"
#include "confrac/json_io.hpp"
#include "confrac/ode_solver.hpp"
#include "confrac/suites.hpp"

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction; int and "p/q" strings
// are accepted on input.
namespace pybind11::detail {
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        try {
            if (py::isinstance<py::str>(src)) {
                value = confrac::parse_rational(src.cast<std::string>());
                return true;
            }
            if (py::isinstance<py::bool_>(src)) {
                return false;
            }
            if (py::isinstance<py::int_>(src)) {
                value = confrac::parse_rational(py::str(src).cast<std::string>());
                return true;
            }
            const auto fraction = py::module_::import("fractions").attr("Fraction");
            if (py::isinstance(src, fraction)) {
                value = confrac::parse_rational(py::str(src.attr("numerator")).cast<std::string>() + "/" +
                                                py::str(src.attr("denominator")).cast<std::string>());
                return true;
            }
        } catch (const confrac::Error&) {
            return false;
        }
        return false;
    }

    static handle cast(const mpq_class& v, return_value_policy, handle) {
        return py::module_::import("fractions").attr("Fraction")(confrac::to_string(v)).release();
    }
};
} // namespace pybind11::detail

namespace {

py::object to_python(const confrac::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

confrac::Json from_python(const py::object& obj) {
    return confrac::Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

std::string point_kind_name(confrac::PointKind k) {
    return k == confrac::PointKind::alpha_ordinary ? "alpha-ordinary" : "alpha-singular";
}

} // namespace

PYBIND11_MODULE(_confrac, m) {
    using namespace confrac;
    m.doc() = "Conformable fractional power series, series ODE solver and Hermite polynomials";

    auto base = py::register_exception<Error>(m, "ConfracError", PyExc_ValueError);
    py::register_exception<IncompatibleSeries>(m, "IncompatibleSeries", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<TruncationError>(m, "TruncationError", base);
    py::register_exception<InsufficientData>(m, "InsufficientData", base);
    py::register_exception<UnsupportedAlpha>(m, "UnsupportedAlpha", base);
    py::register_exception<RodriguesMismatch>(m, "RodriguesMismatch", base);
    py::register_exception<MalformedInput>(m, "MalformedInput", base);

    py::class_<AlphaSeries>(m, "AlphaSeries")
        .def(py::init<Rational, Rational, std::vector<Rational>>(), py::arg("alpha"), py::arg("x0"), py::arg("coeffs"))
        .def_static("constant", &AlphaSeries::constant, py::arg("alpha"), py::arg("x0"), py::arg("value"),
                    py::arg("order") = 0)
        .def_static("zero", &AlphaSeries::zero, py::arg("alpha"), py::arg("x0"), py::arg("order"))
        .def_static("monomial", &AlphaSeries::monomial, py::arg("alpha"), py::arg("x0"), py::arg("index"),
                    py::arg("order"), py::arg("scale") = Rational(1))
        .def_static("from_polynomial", &AlphaSeries::from_polynomial, py::arg("alpha"), py::arg("x0"),
                    py::arg("coeffs"), py::arg("order"))
        .def_static("from_json",
                    [](const std::string& text) { return series_from_json(Json::parse(text)); })
        .def_property_readonly("alpha", &AlphaSeries::alpha)
        .def_property_readonly("x0", &AlphaSeries::x0)
        .def_property_readonly("coeffs", &AlphaSeries::coeffs)
        .def_property_readonly("order", &AlphaSeries::order)
        .def("degree", &AlphaSeries::degree)
        .def("is_zero", &AlphaSeries::is_zero)
        .def("truncated", &AlphaSeries::truncated, py::arg("order"))
        .def("eval", &AlphaSeries::eval, py::arg("x"))
        .def("__call__", &AlphaSeries::eval)
        .def("to_json", [](const AlphaSeries& s) { return to_json(s).dump(); })
        .def("__getitem__", [](const AlphaSeries& s, std::size_t k) {
            if (k > s.order()) {
                throw py::index_error("coefficient index beyond the series order");
            }
            return s[k];
        })
        .def("__len__", [](const AlphaSeries& s) { return s.coeffs().size(); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const AlphaSeries& s) { return "AlphaSeries(" + to_json(s).dump() + ")"; });

    m.def("add", &add);
    m.def("mul", &mul);
    m.def("scale", &scale, py::arg("s"), py::arg("factor"));
    m.def("monomial_shift", &monomial_shift);
    m.def("deriv_alpha", py::overload_cast<const AlphaSeries&, std::size_t>(&deriv_alpha), py::arg("s"),
          py::arg("times") = 1);
    m.def(
        "gaussian_weight_series",
        [](const Rational& alpha, std::size_t order, int sign) {
            if (sign != 1 && sign != -1) {
                throw MalformedInput("sign must be +1 or -1");
            }
            return gaussian_weight_series(alpha, order, sign > 0 ? WeightSign::plus : WeightSign::minus);
        },
        py::arg("alpha"), py::arg("order"), py::arg("sign"));

    // conformable calculus
    m.def(
        "t_alpha_numeric",
        [](const std::function<double(double)>& f, double x, const Rational& alpha, double a) {
            return t_alpha_numeric(f, x, alpha, a);
        },
        py::arg("f"), py::arg("x"), py::arg("alpha"), py::arg("a") = 0.0);
    m.def(
        "integral_alpha",
        [](const std::function<double(double)>& f, double a, double b, const Rational& alpha, int nodes) {
            return integral_alpha(f, a, b, alpha, {nodes, QuadratureSpec::Mode::finite_interval_weighted});
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("node_count") = 64);
    m.def(
        "gaussian_integral_alpha",
        [](const std::function<double(double)>& f, const Rational& alpha, int nodes) {
            return gaussian_integral_alpha(f, alpha, {nodes, QuadratureSpec::Mode::hermite_substitution});
        },
        py::arg("f"), py::arg("alpha"), py::arg("node_count") = 32);
    m.def(
        "hermite_inner_product",
        [](int mi, int ni, const Rational& alpha, std::optional<int> nodes) {
            std::optional<QuadratureSpec> spec;
            if (nodes) {
                spec = QuadratureSpec{*nodes, QuadratureSpec::Mode::hermite_substitution};
            }
            return hermite_inner_product(mi, ni, alpha, spec);
        },
        py::arg("m"), py::arg("n"), py::arg("alpha"), py::arg("node_count") = py::none());
    m.def("gauss_hermite", [](int n) {
        auto r = gauss_hermite(n);
        return py::make_tuple(r.nodes, r.weights);
    });
    m.def("gauss_legendre", [](int n) {
        auto r = gauss_legendre(n);
        return py::make_tuple(r.nodes, r.weights);
    });

    // ODE solver
    py::class_<AlphaODE2>(m, "AlphaODE2")
        .def(py::init<AlphaSeries, AlphaSeries>(), py::arg("p"), py::arg("q"))
        .def_property_readonly("p", &AlphaODE2::p)
        .def_property_readonly("q", &AlphaODE2::q);

    py::class_<RationalAlphaFunction>(m, "RationalAlphaFunction")
        .def(py::init<AlphaSeries, AlphaSeries>(), py::arg("numerator"), py::arg("denominator"))
        .def(py::init<AlphaSeries>(), py::arg("numerator"))
        .def_property_readonly("numerator", &RationalAlphaFunction::numerator)
        .def_property_readonly("denominator", &RationalAlphaFunction::denominator)
        .def("reduced", &RationalAlphaFunction::reduced);

    m.def(
        "classify_point",
        [](const RationalAlphaFunction& p, const RationalAlphaFunction& q, const Rational& x0) {
            return point_kind_name(classify_point(p, q, x0));
        },
        py::arg("p"), py::arg("q"), py::arg("x0"));
    m.def("expand_series", &expand_series, py::arg("f"), py::arg("at"), py::arg("order"));

    py::class_<SolveReport>(m, "SolveReport")
        .def_readonly("solution", &SolveReport::solution)
        .def_readonly("radius", &SolveReport::radius)
        .def_readonly("residual_ok_through", &SolveReport::residual_ok_through)
        .def("to_json", [](const SolveReport& r) { return to_json(r).dump(); });

    m.def("solve_series", &solve_series, py::arg("ode"), py::arg("c0"), py::arg("c1"), py::arg("order"),
          py::arg("radius_window") = kDefaultRadiusWindow);
    m.def("residual", &residual, py::arg("ode"), py::arg("y"));
    m.def("radius_estimate", &radius_estimate, py::arg("s"), py::arg("window") = kDefaultRadiusWindow);

    // Hermite
    py::class_<HermitePolyAlpha>(m, "HermitePolyAlpha")
        .def_readonly("m", &HermitePolyAlpha::m)
        .def_readonly("poly", &HermitePolyAlpha::poly)
        .def("padded", &HermitePolyAlpha::padded, py::arg("order"))
        .def("to_json", [](const HermitePolyAlpha& h) { return to_json(h).dump(); })
        .def(py::self == py::self);

    m.def("hermite_ode", &hermite_ode, py::arg("m"), py::arg("alpha"), py::arg("order"));
    m.def("hermite_from_ode", &hermite_from_ode, py::arg("m"), py::arg("alpha"));
    m.def("hermite_three_term", &hermite_three_term, py::arg("m"), py::arg("alpha"));
    m.def("hermite_rodrigues", &hermite_rodrigues, py::arg("m"), py::arg("alpha"), py::arg("order") = py::none());
    m.def("substitution_oracle", &substitution_oracle, py::arg("m"), py::arg("alpha"));
    m.def(
        "verify_property",
        [](const std::string& name, int m_max, const Rational& alpha) {
            return to_python(to_json(verify_property(parse_hermite_property(name), m_max, alpha)));
        },
        py::arg("property"), py::arg("m_max"), py::arg("alpha"));
    m.def(
        "verify_orthogonality", [](int n_max, int j) { return to_python(to_json(verify_orthogonality(n_max, j))); },
        py::arg("n_max"), py::arg("j"));
    m.def("hermite_norm", &hermite_norm, py::arg("n"), py::arg("alpha"));

    m.def(
        "run_suite",
        [](const std::string& name, int m_max, int j, std::optional<Rational> alpha, std::uint64_t seed,
           int instances) {
            SuiteOptions options{m_max, j, std::move(alpha), seed, instances};
            return to_python(run_suite(name, options).to_json());
        },
        py::arg("name"), py::arg("m_max") = 10, py::arg("j") = 1, py::arg("alpha") = py::none(),
        py::arg("seed") = SuiteOptions{}.seed, py::arg("instances") = SuiteOptions{}.instances);

    m.def(
        "series_from_dict", [](const py::object& obj) { return series_from_json(from_python(obj)); },
        py::arg("data"));
    m.def("series_to_dict", [](const AlphaSeries& s) { return to_python(to_json(s)); }, py::arg("series"));
}

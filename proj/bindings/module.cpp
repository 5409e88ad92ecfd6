#include "sipoly/classify.hpp"
#include "sipoly/generators.hpp"
#include "sipoly/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

namespace py = pybind11;
using namespace sipoly;

namespace {

Polynomial make_poly(const std::string& text) { return Polynomial::parse(text); }

std::vector<std::pair<std::string, std::string>> roots_as_pairs(
    const Polynomial& p, const std::string& width) {
    Polynomial target = p;
    if (p.degree() >= 1 && !square_free(p))
        target = p.divmod(gcd(p, p.derivative())).first;
    std::vector<std::pair<std::string, std::string>> out;
    for (auto iv : isolate_real_roots(target)) {
        if (!width.empty()) iv = refine(target, iv, parse_rational(width));
        out.emplace_back(to_string(iv.lo), to_string(iv.hi));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_sipoly, m) {
    m.doc() = "Exact classification of self-interlacing and Hurwitz-stable polynomials";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NoExpansionError>(m, "NoExpansionError", PyExc_ArithmeticError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init(&make_poly), py::arg("text"),
             "Parse descending-power rational coefficients")
        .def_static("from_roots",
                    [](const std::vector<std::string>& roots, const std::string& leading) {
                        std::vector<Rational> parsed;
                        for (const std::string& r : roots) parsed.push_back(parse_rational(r));
                        return Polynomial::from_roots(parsed, parse_rational(leading));
                    },
                    py::arg("roots"), py::arg("leading") = "1")
        .def_property_readonly("degree", &Polynomial::degree)
        .def("coeff", [](const Polynomial& p, int k) { return to_string(p.coeff(k)); })
        .def("derivative", [](const Polynomial& p, int k) { return p.derivative(k); },
             py::arg("k") = 1)
        .def("reflect", &Polynomial::reflect)
        .def("dual", &Polynomial::dual)
        .def("__call__",
             [](const Polynomial& p, const std::string& x) {
                 return to_string(p(parse_rational(x)));
             })
        .def("__str__", &Polynomial::to_text)
        .def("__repr__",
             [](const Polynomial& p) { return "Polynomial('" + p.to_text() + "')"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; });
    py::implicitly_convertible<std::string, Polynomial>();

    m.def("classify_json",
          [](const std::string& text) { return to_json(classify(make_poly(text))).dump(); },
          py::arg("polynomial"), "Full classification report as a JSON string");
    m.def("minors_json",
          [](const std::string& text) { return minors_payload(make_poly(text)).dump(); },
          py::arg("polynomial"), "Hurwitz minors and Hankel determinant families");
    m.def("cf_json",
          [](const std::string& text) {
              const Polynomial q = normalize_leading(make_poly(text));
              nlohmann::json out;
              out["cf"] = to_json(cf_expand(associated_phi(q)));
              out["cf_from_minors"] = to_json(cf_coeffs_from_minors(q));
              return out.dump();
          },
          py::arg("polynomial"), "Stieltjes ladder from both computation paths");
    m.def("dual",
          [](const std::string& text) { return make_poly(text).dual().to_text(); },
          py::arg("polynomial"));
    m.def("isolate_roots", &roots_as_pairs, py::arg("polynomial"), py::arg("width") = "",
          "Rational isolating intervals (lo, hi) for the real roots");
    m.def("si_kind",
          [](const std::string& text) {
              return std::string(to_string(si_oracle(make_poly(text)).kind));
          },
          py::arg("polynomial"), "Root-isolation verdict: SI_I, SI_II or NOT_SI");
    m.def("stability",
          [](const std::string& text) {
              return std::string(to_string(stability_oracle(make_poly(text))));
          },
          py::arg("polynomial"), "Numeric verdict: STABLE, NOT_STABLE or INDETERMINATE");
    m.def("generate_si",
          [](int degree, std::uint64_t seed, const std::string& kind) {
              std::mt19937_64 rng(seed);
              return random_si_poly(rng, degree,
                                    kind == "II" ? SiKind::kind_ii : SiKind::kind_i)
                  .poly;
          },
          py::arg("degree"), py::arg("seed") = 0, py::arg("kind") = "I");
    m.def("generate_stable",
          [](int degree, std::uint64_t seed) {
              std::mt19937_64 rng(seed);
              return random_stable_poly(rng, degree).poly;
          },
          py::arg("degree"), py::arg("seed") = 0);

    m.attr("__version__") = "1.0.0";
}

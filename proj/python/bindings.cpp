#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oplab/constructions.hpp"
#include "oplab/presets.hpp"
#include "oplab/series.hpp"
#include "oplab/single_branched.hpp"
#include "oplab/sweep.hpp"

namespace py = pybind11;
using namespace oplab;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

BigInt to_big(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(to_big(h));
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
        Rational q(to_big(h.attr("numerator")), to_big(h.attr("denominator")));
        q.canonicalize();
        return q;
    }
    return parse_decimal_rational(py::str(h).cast<std::string>());
}

py::list to_py(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const Polynomial& p) {
    py::list out;
    for (const auto& x : p) out.append(to_py(x));
    return out;
}

py::list to_py(const DimSeries& d) { return to_py(d.values); }

DimSeries series_from(const py::iterable& values, IndexKind kind = IndexKind::degree) {
    std::vector<BigInt> v;
    for (auto h : values) v.push_back(to_big(h));
    return make_series(std::move(v), kind);
}

SeriesWindow window_from(const py::iterable& values) {
    SeriesWindow w;
    for (auto h : values) w.coefficients.push_back(to_rational(h));
    return w;
}

py::object optional_int(const std::optional<int>& v) { return v ? py::object(py::int_(*v)) : py::none(); }

AlphabetPtr alphabet_from(const std::vector<std::pair<std::string, int>>& generators) {
    std::vector<Generator> g;
    for (const auto& [id, arity] : generators) g.push_back({id, arity});
    return make_alphabet(std::move(g));
}

py::dict gap_dict(const GapReport& r) {
    py::dict d;
    d["criterion_d"] = optional_int(r.criterion_d);
    d["growth_class"] = std::string(to_string(r.growth_class));
    d["weight_counts"] = to_py(r.weight_counts);
    d["partial_sums"] = to_py(r.partial_sums);
    if (r.affine) {
        py::dict a;
        a["slope"] = r.affine->slope;
        a["intercept"] = r.affine->intercept;
        a["first_violation"] = optional_int(r.affine->first_violation);
        d["affine"] = a;
    } else {
        d["affine"] = py::none();
    }
    return d;
}

py::dict profile_dict(const OperadDimProfile& p) {
    py::dict d;
    d["dims"] = to_py(p.dims);
    d["provenance"] = std::string(to_string(p.provenance));
    return d;
}

}  // namespace

PYBIND11_MODULE(_oplab, m) {
    m.doc() = "Dimension sequences of monomial operads and graded algebras.";

    static py::exception<Error> base(m, "OplabError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError", base.ptr());
    py::register_exception<CompletenessError>(m, "CompletenessError", base.ptr());
    py::register_exception<WindowTooShortError>(m, "WindowTooShortError", base.ptr());
    py::register_exception<DegenerateSeriesError>(m, "DegenerateSeriesError", base.ptr());

    py::class_<MonomialOperadPresentation>(m, "Presentation")
        .def(py::init([](const std::vector<std::pair<std::string, int>>& generators,
                         const std::vector<std::string>& relations, std::string name) {
                 auto A = alphabet_from(generators);
                 std::vector<TreeMonomial> r;
                 for (const auto& s : relations) r.push_back(parse_monomial(s, A));
                 return MonomialOperadPresentation(A, std::move(r), std::move(name));
             }),
             py::arg("generators"), py::arg("relations"), py::arg("name") = "")
        .def_static("from_text", &parse_presentation, py::arg("text"), py::arg("name") = "")
        .def_property_readonly("name", &MonomialOperadPresentation::name)
        .def_property_readonly("generators",
                               [](const MonomialOperadPresentation& p) {
                                   std::vector<std::pair<std::string, int>> out;
                                   for (const auto& g : p.alphabet()->generators()) out.emplace_back(g.id, g.arity);
                                   return out;
                               })
        .def_property_readonly("relations",
                               [](const MonomialOperadPresentation& p) {
                                   std::vector<std::string> out;
                                   for (const auto& r : p.relations()) out.push_back(r.to_string());
                                   return out;
                               })
        .def_property_readonly("fingerprint", &MonomialOperadPresentation::fingerprint)
        .def("to_text", &MonomialOperadPresentation::to_text)
        .def(
            "dims",
            [](const MonomialOperadPresentation& p, int max_arity, const std::string& engine,
               std::optional<int> weight_cap) { return to_py(dim_by_arity(p, max_arity, parse_engine(engine), weight_cap)); },
            py::arg("max_arity"), py::arg("engine") = "dp", py::arg("weight_cap") = py::none())
        .def(
            "dims_by_weight",
            [](const MonomialOperadPresentation& p, int max_weight, const std::string& engine) {
                return to_py(dim_by_weight(p, max_weight, parse_engine(engine)));
            },
            py::arg("max_weight"), py::arg("engine") = "dp")
        .def(
            "normal_forms",
            [](const MonomialOperadPresentation& p, int max_weight) {
                std::vector<std::string> out;
                for (const auto& t : enumerate_irr(p, max_weight)) out.push_back(t.to_string());
                return out;
            },
            py::arg("max_weight"))
        .def(
            "is_normal_form",
            [](const MonomialOperadPresentation& p, const std::string& literal) {
                return is_normal_form(p, parse_monomial(literal, p.alphabet()));
            },
            py::arg("literal"))
        .def(
            "gapcheck", [](const MonomialOperadPresentation& p, int max_weight) { return gap_dict(gap_dichotomy_check(p, max_weight)); },
            py::arg("max_weight"))
        .def("__repr__", [](const MonomialOperadPresentation& p) {
            return "<Presentation " + (p.name().empty() ? std::string("?") : p.name()) + " with " +
                   std::to_string(p.relations().size()) + " relations>";
        });

    py::class_<MonomialAlgebraPresentation>(m, "Algebra")
        .def(py::init([](const std::vector<std::string>& variables, const std::vector<std::vector<int>>& forbidden,
                         std::string name) { return MonomialAlgebraPresentation(variables, forbidden, std::move(name)); }),
             py::arg("variables"), py::arg("forbidden"), py::arg("name") = "")
        .def_static("from_text", &parse_algebra, py::arg("text"), py::arg("name") = "")
        .def_property_readonly("name", &MonomialAlgebraPresentation::name)
        .def_property_readonly("variables", &MonomialAlgebraPresentation::variables)
        .def_property_readonly("forbidden", &MonomialAlgebraPresentation::forbidden)
        .def("to_text", &MonomialAlgebraPresentation::to_text)
        .def(
            "hilbert", [](const MonomialAlgebraPresentation& a, int max_degree) { return to_py(hilbert_dims(a, max_degree)); },
            py::arg("max_degree"))
        .def("operadize", &operadize);

    m.def("divides", [](const std::vector<std::pair<std::string, int>>& generators, const std::string& divisor,
                        const std::string& t) {
        auto A = alphabet_from(generators);
        return divides(parse_monomial(divisor, A), parse_monomial(t, A));
    }, py::arg("generators"), py::arg("divisor"), py::arg("monomial"));

    m.def("minimal_period", [](const std::vector<std::pair<std::string, int>>& generators, const std::string& word) {
        auto p = minimal_period(parse_branch_word(word, alphabet_from(generators)));
        return optional_int(p);
    }, py::arg("generators"), py::arg("word"));

    m.def("one_turn_counts", [](int max_height) {
        return to_py(closed_set_counts(at_most_one_turn_system(max_height), max_height));
    }, py::arg("max_height"));

    m.def("preset_list", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : preset_catalog()) out.emplace_back(p.name, p.description);
        return out;
    });
    m.def("preset_dims", [](const std::string& name, int max_index) { return to_py(resolve_preset(name).dims(max_index)); },
          py::arg("name"), py::arg("max_index"));
    m.def("preset_presentation", [](const std::string& name) -> py::object {
        auto p = resolve_preset(name);
        return p.presentation ? py::cast(*p.presentation) : py::none();
    }, py::arg("name"));

    m.def("min_envelope", [](const py::iterable& algebra_dims) {
        return profile_dict(min_envelope_dims(series_from(algebra_dims)));
    }, py::arg("algebra_dims"));
    m.def("symmetric_envelope", [](const py::iterable& algebra_dims) {
        return profile_dict(symmetric_envelope_dims(series_from(algebra_dims)));
    }, py::arg("algebra_dims"));
    m.def("operadization_dims", [](const py::iterable& algebra_dims, int d, int max_arity) {
        return profile_dict(operadization_dims(series_from(algebra_dims), d, max_arity));
    }, py::arg("algebra_dims"), py::arg("generators"), py::arg("max_arity"));

    m.def("gk", [](const py::iterable& dims, double tail) {
        auto r = gk_estimate(series_from(dims), tail);
        py::dict d;
        d["n"] = r.n;
        d["window_start"] = r.window_start;
        d["pointwise"] = r.pointwise;
        d["pointwise_max"] = r.pointwise_max;
        d["slope"] = r.slope;
        d["exp_flag"] = r.exp_flag;
        return d;
    }, py::arg("dims"), py::arg("tail") = 1.0 / 3.0);

    m.def("fit_rational", [](const py::iterable& values, std::size_t holdout) -> py::object {
        auto fit = fit_rational(window_from(values), holdout);
        if (!fit) return py::none();
        py::dict d;
        d["numerator"] = to_py(fit->numerator);
        d["denominator"] = to_py(fit->denominator);
        d["holdout_verified"] = fit->holdout_verified;
        d["text"] = fit->to_string();
        return d;
    }, py::arg("values"), py::arg("holdout") = 20);

    m.def("guess", [](const py::iterable& values, int max_order, int max_degree, std::size_t holdout) -> py::object {
        auto c = guess_holonomic(window_from(values), max_order, max_degree, holdout);
        if (!c) return py::none();
        py::dict d;
        d["order"] = c->order;
        d["degree"] = c->degree;
        py::list coeffs;
        for (const auto& p : c->coefficients) coeffs.append(to_py(p));
        d["coefficients"] = coeffs;
        d["holdout_verified"] = c->holdout_verified;
        d["text"] = c->to_string();
        return d;
    }, py::arg("values"), py::arg("max_order"), py::arg("max_degree"), py::arg("holdout") = 20);

    m.def("zero_runs", [](const py::iterable& values) {
        auto r = zero_run_report(series_from(values).values);
        py::dict d;
        d["runs"] = r.runs;
        d["max_run"] = r.max_run;
        d["growing"] = r.growing;
        return d;
    }, py::arg("values"));

    m.def("sweep", [](int max_relation_weight, int horizon, unsigned threads) {
        SweepReport r;
        {
            py::gil_scoped_release release;
            r = run_sweep(max_relation_weight, horizon, threads);
        }
        py::list rows;
        for (const auto& row : r.rows) {
            py::dict d;
            d["relations"] = row.relations;
            d["criterion_d"] = optional_int(row.criterion_d);
            d["growth_class"] = std::string(to_string(row.growth_class));
            d["tail_exponent"] = row.tail_exponent;
            d["exponential"] = row.exponential;
            rows.append(d);
        }
        return rows;
    }, py::arg("max_relation_weight"), py::arg("horizon"), py::arg("threads") = 1);
}

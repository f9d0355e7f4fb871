#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricode/json_io.hpp"

namespace py = pybind11;
using namespace toricode;

namespace {

py::object json_to_py(const Json& j) {
    auto loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

DegreeOneDescriptor make_descriptor(bool delta2, const std::vector<long long>& a, int pyramids) {
    DegreeOneDescriptor d;
    d.is_delta2 = delta2;
    d.a = a;
    d.pyramid_levels = pyramids;
    d.validate();
    return d;
}

ModeConfig make_config(long long samples, std::uint64_t seed, long long exhaustive_threshold,
                       int max_extension) {
    ModeConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.exhaustive_threshold = exhaustive_threshold;
    cfg.max_extension = max_extension;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "toric codes from lattice polytopes over finite fields";

    py::register_exception<Error>(m, "ToricodeError");

    py::class_<Field>(m, "Field")
        .def(py::init<int, int>(), py::arg("p"), py::arg("e") = 1)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("e", &Field::e)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("modulus", &Field::modulus)
        .def_property_readonly("generator", &Field::generator)
        .def("units", &Field::units)
        .def("add", &Field::add)
        .def("mul", &Field::mul)
        .def("neg", &Field::neg)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow);

    py::class_<LatticePolytope>(m, "LatticePolytope")
        .def_property_readonly("dim", &LatticePolytope::dim)
        .def_property_readonly("vertices", &LatticePolytope::vertices)
        .def_property_readonly("lattice_points", &LatticePolytope::lattice_points)
        .def_property_readonly("lattice_point_count", &LatticePolytope::lattice_point_count)
        .def("ehrhart_counts", &LatticePolytope::ehrhart_counts)
        .def("h_star", &LatticePolytope::h_star)
        .def("is_degree_one", &LatticePolytope::is_degree_one)
        .def("normalized_volume", &LatticePolytope::normalized_volume)
        .def("codim", &LatticePolytope::codim)
        .def("report", [](const LatticePolytope& p) { return json_to_py(polytope_report(p)); });

    m.def("lawrence_prism", &lawrence_prism);
    m.def("exceptional_simplex", &exceptional_simplex);
    m.def("pyramid", &pyramid);
    m.def("dilated_simplex", &dilated_simplex);
    m.def("interval", &interval);
    m.def("from_vertices", &LatticePolytope::from_vertices, py::arg("m"), py::arg("vertices"));

    py::class_<EvaluationMatrix>(m, "EvaluationMatrix")
        .def_property_readonly("rows", [](const EvaluationMatrix& a) { return a.a.rows; })
        .def_property_readonly("cols", [](const EvaluationMatrix& a) { return a.a.cols; })
        .def("entry", [](const EvaluationMatrix& a, int r, int c) { return a.a.at(r, c); })
        .def("torus_point", &EvaluationMatrix::torus_point)
        .def("to_csv", [](const EvaluationMatrix& a) { return matrix_to_csv(a.a); });

    m.def("evaluation_matrix", &evaluation_matrix, py::arg("polytope"), py::arg("field"),
          py::arg("row_budget") = 1'000'000);

    py::class_<LinearCode>(m, "LinearCode")
        .def_property_readonly("length", [](const LinearCode& c) { return c.length; })
        .def_property_readonly("rank", [](const LinearCode& c) { return c.rank; })
        .def_property_readonly("role", [](const LinearCode& c) { return c.role; });

    m.def("primal_code", &primal_code);
    m.def("r_s", [](const EvaluationMatrix& a, const std::vector<int>& s) { return r_s(a, s); });
    m.def("f_s", [](const EvaluationMatrix& a, const std::vector<int>& s) { return f_s(a, s); });
    m.def("f_s_enumerate", [](const EvaluationMatrix& a, const std::vector<int>& s) {
        return f_s_enumerate(a, s);
    });
    m.def("dmin_primal_bruteforce", &dmin_primal_bruteforce, py::arg("code"),
          py::arg("budget") = 10'000'000);
    m.def("dmin_dual", [](const EvaluationMatrix& a, int cap) {
        auto r = dmin_dual(a, cap);
        return py::make_tuple(r.value, r.exact);
    }, py::arg("a"), py::arg("cap") = 6);

    m.def("w_s", [](const EvaluationMatrix& a, const std::vector<int>& s, int max_extension) {
        auto r = w_s(a, s, max_extension);
        return r.unbounded ? py::object(py::none()) : py::object(py::int_(r.w));
    }, py::arg("a"), py::arg("s"), py::arg("max_extension") = 2);

    m.def("mode", [](const EvaluationMatrix& a, int s, long long samples, std::uint64_t seed,
                     long long exhaustive_threshold, int max_extension) {
        auto rep = mode(a, s, make_config(samples, seed, exhaustive_threshold, max_extension));
        return json_to_py(mode_report_to_json(rep));
    }, py::arg("a"), py::arg("s"), py::arg("samples") = 2000, py::arg("seed") = 0,
       py::arg("exhaustive_threshold") = 2000, py::arg("max_extension") = 2);

    m.def("relative_mode", [](const LatticePolytope& p, const Field& base, int ext_degree, int s,
                              long long samples, std::uint64_t seed,
                              long long exhaustive_threshold, int max_extension) {
        auto rep = relative_mode(p, base, ext_degree, s,
                                 make_config(samples, seed, exhaustive_threshold, max_extension));
        return json_to_py(mode_report_to_json(rep));
    }, py::arg("polytope"), py::arg("base_field"), py::arg("ext_degree"), py::arg("s"),
       py::arg("samples") = 2000, py::arg("seed") = 0, py::arg("exhaustive_threshold") = 2000,
       py::arg("max_extension") = 2);

    m.def("is_generic_tuple", [](const EvaluationMatrix& a, const std::vector<int>& tuple) {
        return json_to_py(genericity_report_to_json(is_generic_tuple(a, tuple)));
    });

    m.def("generic_fraction", [](const LatticePolytope& p, const Field& f, long long samples,
                                 std::uint64_t seed) {
        auto fr = generic_fraction_estimate(p, f, samples, seed);
        return py::make_tuple(fr.num, fr.den, fr.exhaustive);
    }, py::arg("polytope"), py::arg("field"), py::arg("samples") = 2000, py::arg("seed") = 0);

    m.def("realize", [](bool delta2, const std::vector<long long>& a, int pyramids) {
        return realize(make_descriptor(delta2, a, pyramids));
    }, py::arg("delta2") = false, py::arg("a") = std::vector<long long>{}, py::arg("pyramids") = 0);

    m.def("degree_one_params", [](int q, bool delta2, const std::vector<long long>& a,
                                  int pyramids) {
        auto pred = degree_one_params(make_descriptor(delta2, a, pyramids), q);
        const char* src = pred.source == PredictionSource::Delta2Case ? "delta2"
                          : pred.source == PredictionSource::LawrenceStrict ? "lawrence_strict"
                                                                            : "lawrence_equal";
        return py::dict(py::arg("n") = pred.n, py::arg("k") = pred.k, py::arg("dmin") = pred.dmin,
                        py::arg("source") = src, py::arg("q") = pred.q);
    }, py::arg("q"), py::arg("delta2") = false, py::arg("a") = std::vector<long long>{},
       py::arg("pyramids") = 0);

    m.def("dual_dmin_predicted", [](bool delta2, const std::vector<long long>& a, int pyramids) {
        return dual_dmin_predicted(make_descriptor(delta2, a, pyramids)).value;
    }, py::arg("delta2") = false, py::arg("a") = std::vector<long long>{}, py::arg("pyramids") = 0);

    m.def("mode_predicted", [](const LatticePolytope& p) {
        auto mp = mode_predicted(p);
        return py::make_tuple(mp.value, mp.cofinal_caveat);
    });

    m.def("dual_dmin_bound", &dual_dmin_bound);

    m.def("verify_table1", [] {
        py::list out;
        for (const auto& c : verify_table1()) out.append(json_to_py(table1_check_to_json(c)));
        return out;
    });
}

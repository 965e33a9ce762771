#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nhosc/errors.hpp"
#include "nhosc/metric.hpp"
#include "nhosc/model.hpp"
#include "nhosc/spectral.hpp"
#include "nhosc/sweep.hpp"
#include "nhosc/thermo.hpp"
#include "nhosc/verify.hpp"

namespace py = pybind11;
using namespace nhosc;

namespace {

py::array_t<cplx> to_numpy(const BlockMatrix2& m) {
    py::array_t<cplx> a({2, 2});
    auto v = a.mutable_unchecked<2>();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v(i, j) = m(i, j);
    return a;
}

SubspaceIndex index(int n) { return SubspaceIndex::from_int(n); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pseudo-Hermitian spin-1/2 + oscillator model: spectra, metric and thermodynamics";

    py::register_exception<ExceptionalPoint>(m, "ExceptionalPoint", PyExc_ArithmeticError);
    py::register_exception<StencilCrossesSingularity>(m, "StencilCrossesSingularity", PyExc_ArithmeticError);
    py::register_exception<NoSignChange>(m, "NoSignChange", PyExc_ValueError);

    py::enum_<PhaseRegion>(m, "PhaseRegion")
        .value("UNBROKEN", PhaseRegion::Unbroken)
        .value("BROKEN", PhaseRegion::Broken)
        .value("EXCEPTIONAL", PhaseRegion::Exceptional)
        .def("__str__", [](PhaseRegion r) { return std::string(to_string(r)); });

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("homega"), py::arg("mu"))
        .def_property_readonly("alpha", &ModelParams::alpha)
        .def_property_readonly("homega", &ModelParams::homega)
        .def_property_readonly("mu", &ModelParams::mu)
        .def_property_readonly("delta", &ModelParams::delta)
        .def("with_mu", &ModelParams::with_mu, py::arg("mu"))
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream os;
            os << "ModelParams(alpha=" << p.alpha() << ", homega=" << p.homega() << ", mu=" << p.mu() << ")";
            return os.str();
        });

    py::class_<Spectrum2>(m, "Spectrum")
        .def_readonly("e_plus", &Spectrum2::e_plus)
        .def_readonly("e_minus", &Spectrum2::e_minus)
        .def_readonly("region", &Spectrum2::region)
        .def_readonly("discriminant", &Spectrum2::discriminant);

    m.def("build_block", [](const ModelParams& p, int n) { return to_numpy(build_block(p, index(n))); },
          py::arg("params"), py::arg("n"));
    m.def("block_spectrum", [](const ModelParams& p, int n) { return block_spectrum(p, index(n)); }, py::arg("params"),
          py::arg("n"));
    m.def("classify", [](const ModelParams& p, int n) { return classify(p, index(n)); }, py::arg("params"),
          py::arg("n"));
    m.def("critical_coupling", [](const ModelParams& p, int n) { return critical_coupling(p, index(n)); },
          py::arg("params"), py::arg("n"));
    m.def("locate_ep_numeric",
          [](const ModelParams& p, int n, double lo, double hi) { return locate_ep_numeric(p, index(n), lo, hi); },
          py::arg("params"), py::arg("n"), py::arg("lo"), py::arg("hi"));
    m.def("eta", [](const ModelParams& p, int n) { return to_numpy(eta(p, index(n)).matrix); }, py::arg("params"),
          py::arg("n"), "Metric from the balanced-gauge biorthogonal eigenvectors.");
    m.def("eta_closed_form", [](const ModelParams& p, int n) { return to_numpy(eta_closed_form(p, index(n)).matrix); },
          py::arg("params"), py::arg("n"));

    m.def("partition_function",
          [](const ModelParams& p, int n, double tau) { return partition_function(p, index(n), Temperature(tau)); },
          py::arg("params"), py::arg("n"), py::arg("tau"));
    m.def(
        "partition_function_closed_form",
        [](const ModelParams& p, int n, double tau) {
            return partition_function_closed_form(p, index(n), Temperature(tau));
        },
        py::arg("params"), py::arg("n"), py::arg("tau"));
    m.def(
        "thermo_point",
        [](const ModelParams& p, int n, double tau) {
            const ThermoPoint pt = thermo_point(p, index(n), Temperature(tau));
            py::dict d;
            d["n"] = pt.n.n;
            d["mu"] = pt.mu;
            d["tau"] = pt.tau;
            d["region"] = std::string(to_string(pt.region));
            d["Z"] = pt.z;
            d["F"] = pt.free_energy;
            d["S"] = pt.entropy;
            d["Cv"] = pt.specific_heat;
            d["z_positive"] = pt.z_positive;
            return d;
        },
        py::arg("params"), py::arg("n"), py::arg("tau"), "Z, F, S and Cv; undefined values are None.");

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("alpha", &SweepSpec::alpha)
        .def_readwrite("homega", &SweepSpec::homega)
        .def_readwrite("tau", &SweepSpec::tau)
        .def_readwrite("subspaces", &SweepSpec::subspaces)
        .def_readwrite("mu_min", &SweepSpec::mu_min)
        .def_readwrite("mu_max", &SweepSpec::mu_max)
        .def_readwrite("steps", &SweepSpec::steps)
        .def_readwrite("ep_window", &SweepSpec::ep_window)
        .def_readwrite("threads", &SweepSpec::threads);

    // rows stay opaque; emit() turns them into CSV or JSON text
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n", &SweepRow::n)
        .def_readonly("mu", &SweepRow::mu)
        .def_readonly("tau", &SweepRow::tau)
        .def_readonly("region", &SweepRow::region)
        .def_readonly("mu_c", &SweepRow::mu_c)
        .def_readonly("Z", &SweepRow::z)
        .def_readonly("F", &SweepRow::free_energy)
        .def_readonly("S", &SweepRow::entropy)
        .def_readonly("Cv", &SweepRow::specific_heat)
        .def_readonly("valid", &SweepRow::valid);

    m.def("run_sweep", &run_sweep, py::arg("spec"), py::call_guard<py::gil_scoped_release>());
    m.def("figure_dataset", &figure_dataset, py::arg("fig"), py::arg("spec"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "emit",
        [](const std::vector<SweepRow>& rows, const std::string& format) {
            std::ostringstream os;
            emit(rows, parse_format(format), os);
            return os.str();
        },
        py::arg("rows"), py::arg("format") = "csv");

    m.def(
        "verify",
        [](double alpha, double homega, double tau, unsigned cutoff) {
            py::list out;
            for (const CheckResult& r : run_verification_suite({alpha, homega, tau, cutoff})) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["worst"] = r.worst;
                d["threshold"] = r.threshold;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("alpha") = 5.0, py::arg("homega") = 1.0, py::arg("tau") = 5.0, py::arg("cutoff") = 8u);
}

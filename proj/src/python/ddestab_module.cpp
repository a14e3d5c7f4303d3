#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ddestab/core.hpp"
#include "ddestab/delay.hpp"
#include "ddestab/oracle.hpp"
#include "ddestab/region.hpp"
#include "ddestab/simulate.hpp"

namespace py = pybind11;
using namespace ddestab;

namespace {

std::string verdict_repr(const StabilityVerdict& v) {
    std::ostringstream os;
    os << "StabilityVerdict(" << to_string(v.status) << ", " << to_string(v.case_tag) << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_ddestab, m) {
    m.doc() = "stability analysis of x'(t) = lambda*x(t) + gamma*x(t-tau) "
              "with complex coefficients";

    py::register_exception<ContourGrazing>(m, "ContourGrazing", PyExc_RuntimeError);
    py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_RuntimeError);

    py::enum_<Status>(m, "Status")
        .value("Stable", Status::Stable)
        .value("Marginal", Status::Marginal)
        .value("Unstable", Status::Unstable);

    py::enum_<CaseTag>(m, "CaseTag")
        .value("DiscInterior", CaseTag::DiscInterior)
        .value("RegionInterior", CaseTag::RegionInterior)
        .value("Boundary", CaseTag::Boundary)
        .value("NecessaryFail", CaseTag::NecessaryFail)
        .value("SupercriticalA", CaseTag::SupercriticalA);

    py::enum_<RegionKind>(m, "RegionKind")
        .value("NegA", RegionKind::NegA)
        .value("ZeroA", RegionKind::ZeroA)
        .value("PosA", RegionKind::PosA)
        .value("Supercritical", RegionKind::Supercritical);

    py::enum_<DelayKind>(m, "DelayKind")
        .value("AlwaysStable", DelayKind::AlwaysStable)
        .value("NeverStable", DelayKind::NeverStable)
        .value("Finite", DelayKind::Finite);

    py::enum_<RayCoverageKind>(m, "RayCoverageKind")
        .value("FullRay", RayCoverageKind::FullRay)
        .value("TailRay", RayCoverageKind::TailRay)
        .value("Empty", RayCoverageKind::Empty);

    py::class_<DdeProblem>(m, "DdeProblem")
        .def(py::init<Complex, Complex, double>(), py::arg("lam"), py::arg("gamma"),
             py::arg("tau"))
        .def_readonly("lam", &DdeProblem::lambda)
        .def_readonly("gamma", &DdeProblem::gamma)
        .def_readonly("tau", &DdeProblem::tau);

    py::class_<ReducedProblem>(m, "ReducedProblem")
        .def_readonly("a", &ReducedProblem::a)
        .def_readonly("eta", &ReducedProblem::eta)
        .def_readonly("tau", &ReducedProblem::tau)
        .def_readonly("b", &ReducedProblem::b);

    py::class_<StabilityVerdict>(m, "StabilityVerdict")
        .def_readonly("status", &StabilityVerdict::status)
        .def_readonly("case_tag", &StabilityVerdict::case_tag)
        .def_readonly("witness", &StabilityVerdict::witness)
        .def("__repr__", &verdict_repr);

    py::class_<RegionCase>(m, "RegionCase")
        .def_readonly("variant", &RegionCase::variant)
        .def_readonly("a", &RegionCase::a)
        .def_readonly("tau", &RegionCase::tau);

    py::class_<BoundaryCurve>(m, "BoundaryCurve")
        .def_readonly("points", &BoundaryCurve::points)
        .def_readonly("w_values", &BoundaryCurve::w_values)
        .def_readonly("region", &BoundaryCurve::region)
        .def_readonly("closed_by_disc_arc", &BoundaryCurve::closed_by_disc_arc);

    py::class_<RayCoverage>(m, "RayCoverage")
        .def_readonly("beta", &RayCoverage::beta)
        .def_readonly("kind", &RayCoverage::kind)
        .def_readonly("r0", &RayCoverage::r0);

    py::class_<CriticalDelay>(m, "CriticalDelay")
        .def_readonly("kind", &CriticalDelay::kind)
        .def_readonly("tau_star", &CriticalDelay::tau_star)
        .def_readonly("crossing_omega", &CriticalDelay::crossing_omega);

    py::class_<RootReport>(m, "RootReport")
        .def_readonly("rhp_count", &RootReport::rhp_count)
        .def_readonly("roots", &RootReport::roots)
        .def_readonly("residuals", &RootReport::residuals)
        .def_readonly("contour_radius", &RootReport::contour_radius)
        .def_readonly("margin", &RootReport::margin);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("values", &Trajectory::values)
        .def_readonly("tau", &Trajectory::tau)
        .def_readonly("dt", &Trajectory::dt)
        .def_readonly("overflow", &Trajectory::overflow);

    m.def("reduce", &reduce, py::arg("problem"),
          "Rotate gamma so the non-delayed coefficient becomes real.");
    m.def("crossing_frequency", &crossing_frequency, py::arg("a"), py::arg("eta_mod"),
          "Axis-crossing frequency, or None when |eta| < |a|.");
    m.def("characteristic_value",
          py::overload_cast<Complex, double, Complex, double>(&characteristic_value),
          py::arg("s"), py::arg("a"), py::arg("eta"), py::arg("tau"));
    m.def("characteristic_value",
          py::overload_cast<Complex, Complex, Complex, double>(&characteristic_value),
          py::arg("s"), py::arg("lam"), py::arg("gamma"), py::arg("tau"));
    m.def("classify_region_case", &classify_region_case, py::arg("a"), py::arg("tau"));

    m.def("boundary_angle", &boundary_angle, py::arg("w"), py::arg("a"), py::arg("tau"));
    m.def("boundary_angle_argmin", &boundary_angle_argmin, py::arg("a"), py::arg("tau"));
    m.def("outer_radius", &outer_radius, py::arg("a"), py::arg("tau"));
    m.def("membership", &membership, py::arg("eta"), py::arg("a"), py::arg("tau"),
          py::arg("boundary_tol") = kBoundaryTol,
          "Stable/Marginal/Unstable verdict for the reduced pair (a, eta) at delay tau.");
    m.def("boundary_curve", &boundary_curve, py::arg("a"), py::arg("tau"), py::arg("n"));
    m.def("classify_ray_coverage", &classify_ray_coverage, py::arg("beta"));

    m.def("critical_delay", &critical_delay, py::arg("a"), py::arg("eta"));

    m.def("count_rhp_roots",
          py::overload_cast<double, Complex, double, double>(&count_rhp_roots), py::arg("a"),
          py::arg("eta"), py::arg("tau"), py::arg("margin") = 0.0);
    m.def("count_rhp_roots_retry",
          py::overload_cast<double, Complex, double, double>(&count_rhp_roots_retry),
          py::arg("a"), py::arg("eta"), py::arg("tau"), py::arg("margin") = 0.0);
    m.def("rightmost_roots",
          py::overload_cast<double, Complex, double, std::size_t, double>(&rightmost_roots),
          py::arg("a"), py::arg("eta"), py::arg("tau"), py::arg("k"), py::arg("margin") = 0.5);

    m.def(
        "integrate",
        [](const DdeProblem& problem, const HistoryFn& history, double horizon,
           int steps_per_delay) { return integrate(problem, history, horizon, steps_per_delay); },
        py::arg("problem"), py::arg("history"), py::arg("horizon"),
        py::arg("steps_per_delay") = 64);
    m.def(
        "integrate",
        [](const DdeProblem& problem, Complex history, double horizon, int steps_per_delay) {
            return integrate(
                problem, [history](double) { return history; }, horizon, steps_per_delay);
        },
        py::arg("problem"), py::arg("history"), py::arg("horizon"),
        py::arg("steps_per_delay") = 64, "Constant-history convenience overload.");
    m.def("decay_rate", &decay_rate, py::arg("trajectory"), py::arg("tail_fraction") = 0.25);
}

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecsim/acceptance.hpp"
#include "ecsim/checks.hpp"
#include "ecsim/fft.hpp"
#include "ecsim/operators.hpp"
#include "ecsim/semigroup.hpp"
#include "ecsim/series_io.hpp"

namespace py = pybind11;
using namespace ecsim;

namespace {

SpectralScalar to_spectral(const Grid& g, const py::array_t<cplx>& a) {
    if (a.ndim() != 2 || a.shape(0) != g.n || a.shape(1) != g.n)
        throw std::invalid_argument("expected a complex array of shape (n, n)");
    SpectralScalar f(g);
    auto r = a.unchecked<2>();
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) f.c[g.idx(i, j)] = r(i, j);
    return f;
}

py::array_t<cplx> from_spectral(const SpectralScalar& f) {
    const Grid& g = f.grid;
    py::array_t<cplx> out({g.n, g.n});
    auto w = out.mutable_unchecked<2>();
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) w(i, j) = f.c[g.idx(i, j)];
    return out;
}

PhysicalScalar to_physical(const Grid& g, const py::array_t<double>& a) {
    if (a.ndim() != 2 || a.shape(0) != g.n || a.shape(1) != g.n)
        throw std::invalid_argument("expected a real array of shape (n, n)");
    PhysicalScalar f(g);
    auto r = a.unchecked<2>();
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) f.v[g.idx(i, j)] = r(i, j);
    return f;
}

py::array_t<double> from_physical(const PhysicalScalar& f) {
    const Grid& g = f.grid;
    py::array_t<double> out({g.n, g.n});
    auto w = out.mutable_unchecked<2>();
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) w(i, j) = f.v[g.idx(i, j)];
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectral core for the coupled charge-transport / Navier-Stokes system";

    py::class_<Grid>(m, "Grid")
        .def(py::init<int, double>(), py::arg("n"), py::arg("half_period"))
        .def_readonly("n", &Grid::n)
        .def_readonly("half_period", &Grid::half_period)
        .def("spacing", &Grid::spacing)
        .def("x", &Grid::x)
        .def("k", &Grid::k)
        .def("mode", &Grid::mode)
        .def("aliased", &Grid::aliased)
        .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; })
        .def("__repr__", [](const Grid& g) {
            return "Grid(n=" + std::to_string(g.n) +
                   ", half_period=" + std::to_string(g.half_period) + ")";
        });

    m.def("forward", [](const Grid& g, const py::array_t<double>& f) {
        return from_spectral(forward(to_physical(g, f)));
    }, py::arg("grid"), py::arg("values"), "collocation samples -> Fourier coefficients");
    m.def("inverse", [](const Grid& g, const py::array_t<cplx>& c) {
        return from_physical(inverse(to_spectral(g, c)));
    }, py::arg("grid"), py::arg("coeffs"), "Fourier coefficients -> collocation samples");

    m.def("fractional_laplacian", [](const Grid& g, const py::array_t<cplx>& c, double alpha) {
        return from_spectral(fractional_laplacian(to_spectral(g, c), alpha));
    }, py::arg("grid"), py::arg("coeffs"), py::arg("alpha"));
    m.def("riesz", [](const Grid& g, const py::array_t<cplx>& c) {
        SpectralVector r = riesz(to_spectral(g, c));
        return py::make_tuple(from_spectral(r.c1), from_spectral(r.c2));
    }, py::arg("grid"), py::arg("coeffs"));
    m.def("leray_project", [](const Grid& g, const py::array_t<cplx>& c1,
                              const py::array_t<cplx>& c2) {
        SpectralVector v(to_spectral(g, c1), to_spectral(g, c2));
        SpectralVector p = leray_project(v);
        return py::make_tuple(from_spectral(p.c1), from_spectral(p.c2));
    }, py::arg("grid"), py::arg("c1"), py::arg("c2"));
    m.def("dealias", [](const Grid& g, const py::array_t<cplx>& c) {
        return from_spectral(dealias(to_spectral(g, c)));
    }, py::arg("grid"), py::arg("coeffs"));

    m.def("norm_l2", [](const Grid& g, const py::array_t<cplx>& c) {
        return norm_l2(to_spectral(g, c));
    }, py::arg("grid"), py::arg("coeffs"));
    m.def("norm_hs", [](const Grid& g, const py::array_t<cplx>& c, double s) {
        return norm_hs(to_spectral(g, c), s);
    }, py::arg("grid"), py::arg("coeffs"), py::arg("s"));
    m.def("norm_linf", [](const Grid& g, const py::array_t<cplx>& c) {
        return norm_linf(to_spectral(g, c));
    }, py::arg("grid"), py::arg("coeffs"));

    m.def("poisson_evolve", [](const Grid& g, const py::array_t<cplx>& c, double t) {
        return from_spectral(poisson_evolve(to_spectral(g, c), t));
    }, py::arg("grid"), py::arg("coeffs"), py::arg("t"), "multiplier exp(-|k| t)");
    m.def("heat_evolve", [](const Grid& g, const py::array_t<cplx>& c1,
                            const py::array_t<cplx>& c2, double t) {
        SpectralVector u(to_spectral(g, c1), to_spectral(g, c2));
        SpectralVector e = heat_evolve(u, t);
        return py::make_tuple(from_spectral(e.c1), from_spectral(e.c2));
    }, py::arg("grid"), py::arg("c1"), py::arg("c2"), py::arg("t"), "multiplier exp(-|k|^2 t)");

    m.def("random_field", [](const Grid& g, std::uint64_t seed, double k0, double mean) {
        return from_spectral(random_field(g, seed, k0, mean));
    }, py::arg("grid"), py::arg("seed"), py::arg("envelope_k0"), py::arg("mean") = 0.0);
    m.def("check_cordoba", [](const Grid& g, const py::array_t<cplx>& c) {
        return check_cordoba(to_spectral(g, c));
    }, py::arg("grid"), py::arg("coeffs"));

    m.def("parse_config", [](const std::string& text) { return serialize_config(parse_config(text)); },
          py::arg("text"), "validate a config document; returns the normalized form");
    m.def("scenario_config", [](const std::string& name) { return serialize_config(scenario(name)); },
          py::arg("name"));
    m.def("run_scenario", [](const std::string& name, const std::string& out_dir) {
        ExperimentConfig cfg = scenario(name);
        RunResult rr = run_experiment(cfg);
        emit_series(rr.records, out_dir + "/" + name + ".csv");
        EnergyTrace tr;
        for (const auto& r : rr.records) tr.t.push_back(r.t);
        tr.energy = rr.energy;
        tr.dissipation = rr.dissipation;
        write_energy_trace(tr, out_dir + "/" + name + "_energy.json");
        return rr.records.size();
    }, py::arg("name"), py::arg("out_dir"), "integrate a standing scenario and write its outputs");
    m.def("run_config", [](const std::string& text) {
        ExperimentConfig cfg = parse_config(text);
        RunResult rr = run_experiment(cfg);
        py::list rows;
        for (const auto& r : rr.records)
            rows.append(py::dict(py::arg("t") = r.t, py::arg("l2q2") = r.l2q2,
                                 py::arg("l2u2") = r.l2u2, py::arg("moment") = r.moment,
                                 py::arg("diffq2") = r.diffq2, py::arg("diffu2") = r.diffu2,
                                 py::arg("mean_q") = r.mean_q));
        return rows;
    }, py::arg("text"), "integrate a config document in-process; returns sampled diagnostics");

    m.attr("PI") = kPi;
}

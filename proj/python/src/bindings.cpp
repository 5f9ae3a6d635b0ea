#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "viscowave/asymptotics.hpp"
#include "viscowave/cli.hpp"
#include "viscowave/dispersion.hpp"
#include "viscowave/errors.hpp"
#include "viscowave/greens.hpp"
#include "viscowave/mittag_leffler.hpp"
#include "viscowave/verification.hpp"

namespace py = pybind11;
using namespace viscowave;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

py::dict curve_dict(const DispersionCurve& c) {
    py::dict d;
    d["model"] = c.model;
    d["omega"] = to_array(c.omega);
    d["attenuation"] = to_array(c.attenuation);
    d["dispersion"] = to_array(c.dispersion);
    d["phase_speed"] = to_array(c.phase_speed);
    d["c_inf"] = c.c_inf;
    d["c_0"] = c.c_0;
    return d;
}

py::dict waveform_dict(const Waveform& w) {
    py::dict d;
    d["dim"] = w.dim;
    d["x"] = w.x;
    d["t"] = to_array(w.t);
    d["u"] = to_array(w.u);
    d["wavefront_time"] = w.wavefront_time;
    d["dc_step_amplitude"] = w.dc_step_amplitude;
    d["wavefront_impulse"] = w.wavefront_impulse;
    d["aliasing_error"] = w.aliasing_error;
    d["imag_residual"] = w.imag_residual;
    d["model"] = w.model;
    d["causality_metric"] = causality_metric(w);
    d["smoothness"] = wavefront_smoothness(w, 3);
    return d;
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["pass"] = r.pass;
    d["worst_violation"] = r.worst_violation;
    d["location"] = r.location;
    d["grid"] = r.grid;
    return d;
}

// The variant caster needs a default-constructible first alternative, so
// models are unpacked by hand.
RelaxationModel to_model(py::handle h) {
    if (py::isinstance<ColeCole>(h)) return h.cast<ColeCole>();
    if (py::isinstance<StandardLinearSolid>(h)) return h.cast<StandardLinearSolid>();
    if (py::isinstance<HavriliakNegami>(h)) return h.cast<HavriliakNegami>();
    if (py::isinstance<ColeDavidson>(h)) return h.cast<ColeDavidson>();
    if (py::isinstance<PowerLawMeasure>(h)) return h.cast<PowerLawMeasure>();
    if (py::isinstance<FiniteBand>(h)) return h.cast<FiniteBand>();
    throw py::type_error("expected a viscowave model");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Attenuation, dispersion and Green's functions of viscoelastic media";

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<ColeCole>(m, "ColeCole")
        .def(py::init<double, double, double, double, double>(), py::arg("a"), py::arg("alpha"), py::arg("tau"),
             py::arg("G_inf"), py::arg("rho") = 1.0)
        .def_static("from_c_inf", &ColeCole::from_c_inf, py::arg("a"), py::arg("alpha"), py::arg("tau"),
                    py::arg("c_inf"), py::arg("rho") = 1.0)
        .def_readonly("a", &ColeCole::a)
        .def_readonly("alpha", &ColeCole::alpha)
        .def_readonly("tau", &ColeCole::tau)
        .def_readonly("G_inf", &ColeCole::G_inf)
        .def_readonly("rho", &ColeCole::rho);
    py::class_<StandardLinearSolid>(m, "StandardLinearSolid")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("tau"), py::arg("G_inf"),
             py::arg("rho") = 1.0)
        .def_static("from_c_inf", &StandardLinearSolid::from_c_inf, py::arg("a"), py::arg("tau"), py::arg("c_inf"),
                    py::arg("rho") = 1.0);
    py::class_<HavriliakNegami>(m, "HavriliakNegami")
        .def(py::init<double, double, double, double, double, double>(), py::arg("b"), py::arg("alpha"),
             py::arg("gamma"), py::arg("tau"), py::arg("G_0"), py::arg("rho") = 1.0)
        .def_static("from_c_inf", &HavriliakNegami::from_c_inf, py::arg("b"), py::arg("alpha"), py::arg("gamma"),
                    py::arg("tau"), py::arg("c_inf"), py::arg("rho") = 1.0);
    py::class_<ColeDavidson>(m, "ColeDavidson")
        .def(py::init<double, double, double, double, double>(), py::arg("b"), py::arg("gamma"), py::arg("tau"),
             py::arg("G_0"), py::arg("rho") = 1.0)
        .def_static("from_c_inf", &ColeDavidson::from_c_inf, py::arg("b"), py::arg("gamma"), py::arg("tau"),
                    py::arg("c_inf"), py::arg("rho") = 1.0);
    py::class_<PowerLawMeasure>(m, "PowerLawMeasure")
        .def(py::init<double, double, double, double>(), py::arg("a_coef"), py::arg("gamma_exp"),
             py::arg("c_inf") = kInf, py::arg("rho") = 1.0);
    py::class_<FiniteBand>(m, "FiniteBand")
        .def(py::init<double, double, double, double, double>(), py::arg("C"), py::arg("a_lo"), py::arg("b_hi"),
             py::arg("c_inf"), py::arg("rho") = 1.0);

    m.def("model_name", [](py::handle h) { return model_name(to_model(h)); });
    m.def("describe", [](py::handle h) { return describe(to_model(h)); });
    m.def("c_inf", [](py::handle h) { return c_inf(to_model(h)); });
    m.def("c_0", [](py::handle h) { return c_0(to_model(h)); });

    m.def("spectral_density", [](py::handle model_obj, py::array_t<double> r) {
        const auto meas = measure_of(to_model(model_obj));
        return py::vectorize([&meas](double x) { return meas(x); })(r);
    });
    m.def("beta", [](py::handle h, cplx p) { return beta(to_model(h), p); });
    m.def("kappa", [](py::handle h, cplx p) { return kappa(to_model(h), p); });
    m.def("modulus", [](py::handle h, cplx p) { return modulus_Q(to_model(h), p); });

    m.def("attenuation",
          [](py::handle model_obj, double omega) { return attenuation(measure_of(to_model(model_obj)), omega); });
    m.def("dispersion", [](py::handle model_obj, double omega) { return dispersion(measure_of(to_model(model_obj)), omega); });
    m.def("phase_speed", [](py::handle h, double omega) { return phase_speed(to_model(h), omega); });
    m.def("curve", [](py::handle model_obj, const std::vector<double>& omega) {
        return curve_dict(curve(to_model(model_obj), omega));
    });
    m.def("log_grid", &log_grid, py::arg("lo"), py::arg("hi"), py::arg("n_per_decade"));

    m.def("green1d", [](py::handle model_obj, double x, int n, double T) {
        return waveform_dict(green1d(to_model(model_obj), x, n, T));
    }, py::arg("model"), py::arg("x"), py::arg("n_samples"), py::arg("T"));
    m.def("green3d", [](py::handle model_obj, double x, int n, double T) {
        return waveform_dict(green3d(to_model(model_obj), x, n, T));
    }, py::arg("model"), py::arg("x"), py::arg("n_samples"), py::arg("T"));

    m.def("ml", &ml, py::arg("alpha"), py::arg("beta"), py::arg("z"));
    m.def("relaxation_modulus_cc", &relaxation_modulus_cc);

    m.def("wavefront_regime", [](py::handle model_obj) { return to_string(classify_wavefront(to_model(model_obj)).tag); });
    m.def("admissibility", [](py::handle model_obj, double scale) {
        const auto w = ComplexWaveNumber::from_model(to_model(model_obj));
        const auto hp = log_polar_grid(scale, 12, 40, 25);
        const auto ra = real_axis_grid(scale, 12, 1000);
        py::list out;
        out.append(report_dict(cm_check_relaxation(w, hp, ra)));
        for (const auto& r : admissibility_battery(w, hp, ra)) out.append(report_dict(r));
        out.append(report_dict(minimum_phase_check(w, default_omega_rect(scale))));
        return out;
    });
    m.def("kk_residual", [](py::handle model_obj, double omega, double omega0) {
        return kk_residual(measure_of(to_model(model_obj)), omega, omega0);
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}

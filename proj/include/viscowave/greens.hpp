#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "viscowave/models.hpp"
#include "viscowave/wavenumber.hpp"

namespace viscowave {

/// Time-sampled Green's function at a fixed distance.
struct Waveform {
    int dim = 1;
    double x = 0.0;                         ///< m
    std::vector<double> t;                  ///< s, uniform, t[0] = 0
    std::vector<double> u;
    std::optional<double> wavefront_time;   ///< x/c_inf; empty when c_inf is infinite
    std::optional<double> dc_step_amplitude;  ///< 1D long-time level 1/(2 c_0); empty in 3D and for fluids
    double wavefront_impulse = 0.0;         ///< weight of a delta at the wavefront (3D, bounded spectrum)
    double aliasing_error = 0.0;            ///< estimated truncation error relative to the peak
    double imag_residual = 0.0;             ///< max |Im| of the inverse transform relative to the peak
    std::string model;

    double dt() const { return t.size() > 1 ? t[1] - t[0] : 0.0; }
};

struct GreenOptions {
    int n_samples = 1 << 14;  ///< power of two, >= 4096
    double T = 0.0;           ///< s, time window
    bool taper = false;       ///< raised cosine over the top 10% of the band
    int jump_terms = 3;       ///< analytic wavefront terms removed for bounded spectra
};

/// u1(t,x): inverse Laplace transform of kappa(p)/(2 p^2) e^{-kappa(p) x},
/// evaluated on the damped Bromwich line Re p = 9/T by FFT. The factor
/// e^{-p x/c_inf} is carried exactly, and when every moment of the spectral
/// measure is finite the leading wavefront singularities are subtracted in
/// the frequency domain and added back in closed form.
Waveform green1d(const ComplexWaveNumber& w, double x, const GreenOptions& opt);
Waveform green1d(const RelaxationModel& model, double x, int n_samples, double T);

/// u3(t,x) from kappa(p)^2/(4 pi x p^2) e^{-kappa(p) x}.
Waveform green3d(const ComplexWaveNumber& w, double x, const GreenOptions& opt);
Waveform green3d(const RelaxationModel& model, double x, int n_samples, double T);

/// max |u| before wavefront_time - 2 dt, relative to max |u|.
double causality_metric(const Waveform& w);

/// Entry 0: |u(t_w + dt) - u(t_w - dt)| / max |u|. Entry k (1..order): the
/// centered k-th difference at the first sample past the wavefront, relative
/// to the largest centered k-th difference anywhere in the waveform.
std::vector<double> wavefront_smoothness(const Waveform& w, int order = 3);

/// CSV with '#' metadata lines followed by the header `t_seconds,u`.
void write_csv(std::ostream& os, const Waveform& w, const std::string& model_json);

}  // namespace viscowave

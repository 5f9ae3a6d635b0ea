"""Attenuation, dispersion and Green's functions of viscoelastic media."""

from ._core import (
    ColeCole,
    ColeDavidson,
    FiniteBand,
    HavriliakNegami,
    NumericalError,
    PowerLawMeasure,
    StandardLinearSolid,
    admissibility,
    attenuation,
    beta,
    c_0,
    c_inf,
    curve,
    describe,
    dispersion,
    green1d,
    green3d,
    kappa,
    kk_residual,
    log_grid,
    ml,
    model_name,
    modulus,
    phase_speed,
    relaxation_modulus_cc,
    run_cli,
    spectral_density,
    wavefront_regime,
)

__version__ = "0.1.0"

"""Pseudo-Hermitian spin-1/2 + oscillator model.

Thin bindings over the C++ core: per-subspace spectra, exceptional points,
the metric operator and eta-weighted thermodynamics.
"""

from ._core import (
    ExceptionalPoint,
    ModelParams,
    NoSignChange,
    PhaseRegion,
    Spectrum,
    StencilCrossesSingularity,
    SweepRow,
    SweepSpec,
    block_spectrum,
    build_block,
    classify,
    critical_coupling,
    emit,
    eta,
    eta_closed_form,
    figure_dataset,
    locate_ep_numeric,
    partition_function,
    partition_function_closed_form,
    run_sweep,
    thermo_point,
    verify,
)

__all__ = [
    "ExceptionalPoint",
    "ModelParams",
    "NoSignChange",
    "PhaseRegion",
    "Spectrum",
    "StencilCrossesSingularity",
    "SweepRow",
    "SweepSpec",
    "block_spectrum",
    "build_block",
    "classify",
    "critical_coupling",
    "emit",
    "eta",
    "eta_closed_form",
    "figure_dataset",
    "locate_ep_numeric",
    "partition_function",
    "partition_function_closed_form",
    "run_sweep",
    "thermo_point",
    "verify",
]

"""Width spectrum, sweepout and ellipsoid checks for the projective plane."""

from ._core import (
    BezoutAudit,
    Calibration,
    ClosureReport,
    CroftonEstimate,
    DriftBudgetExceeded,
    NearSingular,
    NoConvergence,
    RetryCapExceeded,
    SupMassReport,
    SweepPolynomial,
    TracedCurve,
    __version__,
    axial_geodesic,
    basis_labels,
    bezout_audit,
    calibrate,
    crofton_length,
    gamma_length,
    jacobian_fd,
    length_spectrum,
    length_spectrum_size,
    length_vector,
    mass_rp2,
    run_cli,
    standard_width,
    sup_mass_scan,
    sweepout_dimension,
    trace_level_set,
    width_level,
    width_level_by_interval,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

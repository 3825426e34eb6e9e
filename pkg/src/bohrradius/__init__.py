"""Generalised Bohr radii for symmetric analytic functions and harmonic mappings."""
from .exceptions import ConfigurationError, DomainError, PreconditionError, SolverError
from .extremal import (abu_example, analytic_extremal, best_mobius_member, harmonic_sharp_f0,
                       mobius_a0_series, pair_counterexample, phi_alpha)
from .harmonic import (HarmonicCoeffs, kernel_K_coeffs, l2_combined_sum, p_bohr_radius_search,
                       p_bohr_sum, pair_l1_sum, th3_bound, th4_bound)
from .radii import (RadiusResult, SymmetryClass, closed_form_rpm, extremal_parameter_a,
                    harmonic_r0, harmonic_rp_a0, odd_harmonic_rho, pair_counterexample_radius,
                    solve_rpm, threshold_A, threshold_A_upper)
from .series import (PowerSeries, coeffs_from_boundary_samples, extract_coeffs, majorant_sum,
                     mobius_symmetric_expand, weighted_coeff_l2, weighted_coeff_l2_bound)
from .verify import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError", "DomainError", "HarmonicCoeffs", "PowerSeries", "PreconditionError",
    "RadiusResult", "SolverError", "SymmetryClass", "VerificationReport", "abu_example",
    "analytic_extremal", "best_mobius_member", "closed_form_rpm", "coeffs_from_boundary_samples",
    "extract_coeffs", "extremal_parameter_a", "harmonic_r0", "harmonic_rp_a0", "harmonic_sharp_f0",
    "kernel_K_coeffs", "l2_combined_sum", "majorant_sum", "mobius_a0_series",
    "mobius_symmetric_expand", "odd_harmonic_rho", "p_bohr_radius_search", "p_bohr_sum",
    "pair_counterexample", "pair_counterexample_radius", "pair_l1_sum", "phi_alpha", "solve_rpm",
    "th3_bound", "th4_bound", "threshold_A", "threshold_A_upper", "weighted_coeff_l2",
    "weighted_coeff_l2_bound",
]

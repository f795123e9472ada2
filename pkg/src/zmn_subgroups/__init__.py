"""Subgroup counts of Z_m x Z_n, their summatory functions over mn <= x, and
the main-term polynomials of the log-weighted sums."""

from .arith import ArithTables, build_tables, gcd, mu_point, phi_point, tau_point
from .constants import ConstantsBank, build_bank, stieltjes, zeta_deriv_at_2
from .groups import GroupCountRecord, c_count, enumerate_subgroups, s_count
from .residue import (
    MainTermPolynomial,
    TruncatedLaurent,
    closed_form_B_weighted_s,
    f_laurent,
    g_derivatives,
    main_term_coefficients,
    residue_via_g,
)
from .summatory import (
    SummatoryResult,
    dirichlet_truncation,
    summatory,
    tau_square_sum,
    weighted_kernel,
)
from .analysis import ErrorRecord, error_scan, slope_fit

__version__ = "0.1.0"

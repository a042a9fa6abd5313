"""Exact truncated q-series and parity results for partitions with initial repetitions."""

from .builders import (
    FactorSpec,
    GFTermSpec,
    LinComb,
    Prod,
    ProductSpec,
    QuadSum,
    SlaterSum,
    ThetaSpec,
    build_product,
    build_slater_sum,
    build_theta,
    expand,
    expand_parity,
    poch,
    theta_product,
)
from .families import CongruenceClaim, QuadraticFamily, family_members, quad_residues_mod
from .identities import identity_catalog, verify_identity
from .parity import (
    parity_matches_families,
    scan_zero_progressions,
    theorem_registry,
    verify_congruence,
    verify_theorem,
)
from .partitions import bruteforce_count, bruteforce_list, gf_parity, gf_series, restriction_predicate
from .reports import VerificationReport
from .series import ParitySeries, Series, make, to_parity

__version__ = "0.1.0"

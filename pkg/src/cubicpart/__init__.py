"""Exact cubic partition numbers, eta-quotient expansion and congruence certificates."""
from ._backend import NAME as KERNEL_BACKEND
from .congruence import (
    CongruenceCertificate,
    CongruenceClaim,
    PartitionFamily,
    scan,
    theorem_claims,
    verify_chan_identity,
    verify_mod11_reduction,
    verify_progression,
)
from .partitions import chan_split, p_table, pk_sigma_recursion, pk_table, sigma, sigma_k
from .radu_sellers import RSTuple, check_hypotheses, orbit, v_bound
from .series import (
    EtaQuotientSpec,
    IntegerSeries,
    ResidueSeries,
    euler_factor,
    expand,
    expand_mod,
    invert,
    mul,
    parse_eta_spec,
    reduce,
    theta_signed,
)

__version__ = "0.1.0"

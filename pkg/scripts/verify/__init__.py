"""Verification suites: one function per family of functional relations, each taking
(hierarchy, options, sample) and returning VerifyReports in a fixed order."""

from .backlund import verify_backlund
from .baxter import verify_baxter
from .conjugation import verify_conj_invariance
from .conserved import verify_conserved
from .crosscheck import (
    verify_box_complement,
    verify_characters,
    verify_convolution,
    verify_order_independence,
    verify_reverse,
    verify_routes,
)
from .determinants import verify_denominators, verify_det_identities
from .mutation import verify_mutations
from .options import SUBSETS_ALL, SUBSETS_FULL, SuiteOptions
from .poles import detached_pole_reports, verify_pole_cancellation
from .qq import verify_qq
from .runner import EXACT, FAST, SUITES, parse_suites, run_suite
from .tsystem import verify_tsystem

__all__ = [
    "EXACT",
    "FAST",
    "SUBSETS_ALL",
    "SUBSETS_FULL",
    "SUITES",
    "SuiteOptions",
    "detached_pole_reports",
    "parse_suites",
    "run_suite",
    "verify_backlund",
    "verify_baxter",
    "verify_box_complement",
    "verify_characters",
    "verify_conj_invariance",
    "verify_conserved",
    "verify_convolution",
    "verify_denominators",
    "verify_det_identities",
    "verify_mutations",
    "verify_order_independence",
    "verify_pole_cancellation",
    "verify_qq",
    "verify_reverse",
    "verify_routes",
    "verify_tsystem",
]

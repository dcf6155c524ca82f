"""
Suite registry and the run loop behind `baxterq verify`.

- SUITES: name -> fn(h, opts, sample) returning the suite's reports in a fixed order
- exact mode runs each suite once on rational functions
- fast mode runs each suite at weight * (max Q degree) + 1 sample points (see degrees.py)
  and keeps an instance only if it holds at every point, which proves it; divisibility,
  matrix and x = 0 suites always run exactly
- --jobs spreads suites over a process pool; results come back in suite order
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..errors import BaxterQError, SampleCountError
from ..qhierarchy import QHierarchy
from ..report import FAIL, PASS, SuiteResult, VerifyReport
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
from .degrees import sample_requirements
from .determinants import verify_denominators, verify_det_identities
from .mutation import verify_mutations
from .options import SuiteOptions
from .poles import verify_pole_cancellation
from .qq import verify_qq
from .tsystem import verify_tsystem

logger = logging.getLogger(__name__)

# ----------------------------- config -----------------------------
EXACT = "exact"
FAST = "fast"
MODES = (EXACT, FAST)

SAMPLE_SHIFT_RANGE = 64  # sample points avoid Q zeros at x0 t^k for |k| up to this
SAMPLE_ATTEMPTS = 1000

SUITES = {
    "qq": verify_qq,
    "tsystem": verify_tsystem,
    "backlund": verify_backlund,
    "baxter": verify_baxter,
    "poles": verify_pole_cancellation,
    "conserved": verify_conserved,
    "determinants": verify_det_identities,
    "denominators": verify_denominators,
    "conjugation": verify_conj_invariance,
    "reverse": verify_reverse,
    "convolution": verify_convolution,
    "box-complement": verify_box_complement,
    "routes": verify_routes,
    "order": verify_order_independence,
    "characters": verify_characters,
}
EXACT_ONLY = ("poles", "determinants", "denominators", "characters")
MUTATION_TARGETS = ("qq", "tsystem", "backlund", "baxter", "poles")
ALL_SUITES = tuple(SUITES) + ("mutation",)


def parse_suites(text: str) -> List[str]:
    """'all' (every suite except the mutation harness), or a comma list."""
    if text.strip() == "all":
        return list(SUITES)
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [s for s in names if s not in ALL_SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {ALL_SUITES} or 'all'")
    return names


# ----------------------------- sampling -----------------------------


def sample_plan(
    h: QHierarchy, names: Sequence[str], opts: SuiteOptions, samples: Optional[int] = None
) -> Dict[str, int]:
    """Points per sampled suite: its degree bound plus one, or the requested count.

    Raises SampleCountError when the requested count is below a suite's bound.
    """
    need = sample_requirements(h, [n for n in names if n not in EXACT_ONLY], opts)
    short = {name: count for name, count in need.items() if samples is not None and samples < count}
    if short:
        raise SampleCountError(
            f"--samples {samples} is below the points the degree bound needs: {short} "
            f"(max Q degree {h.max_degree()})"
        )
    if samples is not None:
        return {name: samples for name in need}
    return need


def _avoids_zeros(h: QHierarchy, x0: Fraction) -> bool:
    t = h.twist.t
    for poly in h.table.values():
        for k in range(-SAMPLE_SHIFT_RANGE, SAMPLE_SHIFT_RANGE + 1):
            if poly(x0 * t**k) == 0:
                return False
    return True


def choose_samples(h: QHierarchy, count: int, seed: int) -> List[Fraction]:
    """Distinct nonzero rational points away from every shifted Q zero."""
    rng = np.random.default_rng(seed)
    out: List[Fraction] = []
    for _ in range(SAMPLE_ATTEMPTS):
        if len(out) == count:
            break
        x0 = Fraction(int(rng.integers(1, 10**4)), int(rng.integers(1, 10**3)))
        if rng.integers(2):
            x0 = -x0
        if x0 in out:
            continue
        if not _avoids_zeros(h, x0):
            logger.warning(f"sample point {x0} hits a shifted Q zero; resampling")
            continue
        out.append(x0)
    if len(out) < count:
        raise BaxterQError(f"found only {len(out)} of {count} sample points in {SAMPLE_ATTEMPTS} attempts")
    logger.info(f"fast mode: {count} sample points (seed {seed})")
    return out


def merge_sampled(runs: Sequence[List[VerifyReport]], samples: Sequence[Fraction]) -> List[VerifyReport]:
    """One report per instance: pass iff it passed at every point."""
    merged = []
    for column in zip(*runs):
        head = column[0]
        if any(r.id != head.id or r.params != head.params for r in column):
            raise BaxterQError(f"instance order differs between sample points at {head.id} {head.params}")
        failing = next(((x0, r) for x0, r in zip(samples, column) if not r.passed), None)
        micros = sum(r.micros for r in column)
        if failing is None:
            merged.append(VerifyReport(head.id, head.params, PASS, None, micros))
        else:
            x0, r = failing
            witness = dict(r.witness or {}, sample=x0, points=len(samples))
            merged.append(VerifyReport(head.id, head.params, FAIL, witness, micros))
    return merged


# ----------------------------- run loop -----------------------------


def run_one(name: str, h: QHierarchy, opts: SuiteOptions, samples: Optional[List[Fraction]] = None) -> SuiteResult:
    """One suite; samples=None runs exactly."""
    logger.info(f"suite {name}: {'exact' if not samples else f'{len(samples)} sample points'}")
    if name == "mutation":
        # a mutant failing at one point is detected; passing there counts as undetected
        sample = samples[0] if samples else None
        return SuiteResult(name, verify_mutations(h, SUITES, MUTATION_TARGETS, opts, sample))
    suite = SUITES[name]
    if not samples or name in EXACT_ONLY:
        return SuiteResult(name, suite(h, opts, None))
    runs = [suite(h, opts, x0) for x0 in samples]
    return SuiteResult(name, merge_sampled(runs, samples))


def run_suite(
    h: QHierarchy,
    names: Sequence[str],
    opts: Optional[SuiteOptions] = None,
    mode: str = EXACT,
    samples: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
) -> List[SuiteResult]:
    """Run the named suites; results are in the order of names."""
    opts = opts or SuiteOptions()
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    points: Dict[str, Optional[List[Fraction]]] = {name: None for name in names}
    if mode == FAST:
        plan = sample_plan(h, names, opts, samples)
        pool_points = choose_samples(h, max(plan.values(), default=1), seed)
        for name in names:
            points[name] = pool_points[: plan.get(name, len(pool_points))]
    if jobs <= 1 or len(names) <= 1:
        return [run_one(name, h, opts, points[name]) for name in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_one, name, h, opts, points[name]) for name in names]
        return [f.result() for f in futures]


def summary_counts(results: Sequence[SuiteResult]) -> Dict[str, int]:
    total = sum(len(r.reports) for r in results)
    failed = sum(r.failed for r in results)
    return {"instances": total, "passed": total - failed, "failed": failed}

"""
Mutation harness: a suite run on a perturbed hierarchy must fail somewhere.

Each mutant adds one to a single coefficient of a single stored Q (QHierarchy.mutated).
The harness record for (suite, seed) passes when the suite produced at least one
failing instance on that mutant; its witness names the first such instance.
"""

import logging
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from ..qhierarchy import QHierarchy, indices_of
from ..report import FAIL, PASS, VerifyReport, timed
from .options import SUBSETS_ALL, SuiteOptions

logger = logging.getLogger(__name__)

Suite = Callable[[QHierarchy, SuiteOptions, Optional[Fraction]], List[VerifyReport]]

# suites whose checks read every stored entry once every subset pair is walked
ALL_SUBSET_SUITES = ("tsystem", "backlund", "baxter")


def mutant_options(name: str, opts: SuiteOptions) -> SuiteOptions:
    if name in ALL_SUBSET_SUITES:
        return replace(opts, subsets=SUBSETS_ALL)
    return opts


def mutation_report(h: QHierarchy, name: str, suite: Suite, seed: int, opts: SuiteOptions,
                    sample: Optional[Fraction] = None) -> VerifyReport:
    mutant = h.mutated(seed)
    with timed() as elapsed:
        reports = suite(mutant, mutant_options(name, opts), sample)
    failures = [r for r in reports if not r.passed]
    mask, exponent = mutant.mutation
    params = {"suite": name, "seed": seed, "subset": list(indices_of(mask)), "exponent": exponent}
    if failures:
        first = failures[0]
        logger.debug(f"mutant {seed} of {name}: {len(failures)} failures, first {first.id} {first.params}")
        witness = {
            "detected_by": first.id,
            "params": first.params,
            "witness": first.witness,
            "failures": len(failures),
            "instances": len(reports),
        }
        return VerifyReport(f"mutation-{name}", params, PASS, witness, elapsed[0])
    logger.warning(f"mutant {seed} of {name} passed all {len(reports)} instances")
    return VerifyReport(f"mutation-{name}", params, FAIL, {"instances": len(reports)}, elapsed[0])


def verify_mutations(h: QHierarchy, suites: Dict[str, Suite], names: Sequence[str],
                     opts: Optional[SuiteOptions] = None, sample: Optional[Fraction] = None) -> List[VerifyReport]:
    """Seeds 0..mutation_seeds-1 for every named suite."""
    opts = opts or SuiteOptions()
    reports = []
    for name in names:
        for seed in range(opts.mutation_seeds):
            reports.append(mutation_report(h, name, suites[name], seed, opts, sample))
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Mutations: {len(reports)} mutants, {failed} undetected")
    return reports

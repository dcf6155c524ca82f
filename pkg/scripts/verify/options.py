"""Grid sizes shared by the verification suites."""

from dataclasses import dataclass, fields
from typing import Dict, Iterator, List, Tuple

from ..qhierarchy import QHierarchy

SUBSETS_FULL = "full"
SUBSETS_ALL = "all"


@dataclass(frozen=True)
class SuiteOptions:
    """How far each suite walks.

    a_max / s_max bound T-level rectangles, f_max the tableau-level ones (those grow
    fast with the tuple length). size_max bounds |mu| for route and character checks.
    subsets='full' checks the whole boson and fermion sets only, 'all' every pair of
    subsets. mutation_seeds is how many mutants the mutation suite tries per suite.
    """

    a_max: int = 3
    s_max: int = 3
    f_max: int = 2
    size_max: int = 4
    duality_max: int = 3
    conv_max: int = 3
    typical_max: int = 2
    mutation_seeds: int = 3
    subsets: str = SUBSETS_FULL

    @classmethod
    def from_dict(cls, values: Dict) -> "SuiteOptions":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in values.items() if k in known and v is not None})


def _subsets(items: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    out = [()]
    for a in items:
        out += [s + (a,) for s in out]
    return sorted(out, key=lambda s: (len(s), s))


def subset_pairs(h: QHierarchy, opts: SuiteOptions, nonempty: bool = False) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(B, F) pairs in a fixed order: the full sets only, or every pair of subsets."""
    tw = h.twist
    if opts.subsets == SUBSETS_FULL:
        pairs = [(tw.bosons(), tw.fermions())]
    elif opts.subsets == SUBSETS_ALL:
        pairs = [(B, F) for B in _subsets(tw.bosons()) for F in _subsets(tw.fermions())]
    else:
        raise ValueError(f"subsets must be '{SUBSETS_FULL}' or '{SUBSETS_ALL}', got {opts.subsets!r}")
    for B, F in pairs:
        if nonempty and not B and not F:
            continue
        yield B, F


def pair_params(B, F, **extra) -> Dict:
    params = {"B": list(B), "F": list(F)}
    params.update(extra)
    return params

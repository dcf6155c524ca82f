#!/usr/bin/env python3
"""
diagrams.py

Young-diagram combinatorics used by the T-function routes:
- Partition / SkewDiagram with 1-based cells (row i down, column j right)
- 180 degree rotation of a skew diagram
- the (m,n)-index and the Maya sequences of the Wronskian minors
- graded index tuples and admissible tableaux
- (M,N)-hook test and Kac-Dynkin labels with typicality

Partitions serialize as comma-separated integers ("4,3,2,1,1"; "" is empty).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import HookError, VanishingDiagram

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts, trailing zeros stripped."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: Optional[str]) -> "Partition":
        """Parse '4,3,2,1,1' (blank or '0' gives the empty partition)."""
        if text is None:
            return cls()
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(tuple(int(p) for p in text.replace(" ", "").split(",") if p != ""))

    @classmethod
    def rectangle(cls, height: int, width: int) -> "Partition":
        """(width^height)."""
        if height <= 0 or width <= 0:
            return cls()
        return cls((width,) * height)

    def row(self, i: int) -> int:
        """mu_i, 1-based; zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col(self, j: int) -> int:
        """mu'_j, 1-based."""
        return sum(1 for p in self.parts if p >= j)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        """mu_1."""
        return self.row(1)

    @property
    def height(self) -> int:
        """mu'_1."""
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(tuple(self.col(j) for j in range(1, self.width + 1)))

    def contains_rectangle(self, height: int, width: int) -> bool:
        """True when (width^height) fits inside the diagram."""
        if height <= 0 or width <= 0:
            return True
        return self.row(height) >= width

    def contains(self, other: "Partition") -> bool:
        return all(self.row(i) >= other.row(i) for i in range(1, other.length + 1))

    def cells(self) -> List[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, start=1) for j in range(1, p + 1)]

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


EMPTY = Partition()


def conjugate(mu: Partition) -> Partition:
    return mu.conjugate()


def partitions_of(size: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of size, largest part first, in reverse lexicographic order."""
    max_part = size if max_part is None else max_part

    def rec(remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(size, max_part):
        yield Partition(parts)


@dataclass(frozen=True)
class SkewDiagram:
    """lambda inside mu; cells are (i, j) with lambda_i < j <= mu_i."""

    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} is not contained in outer {self.outer}")

    @classmethod
    def of(cls, outer, inner=None) -> "SkewDiagram":
        def coerce(p):
            if p is None:
                return Partition()
            if isinstance(p, Partition):
                return p
            if isinstance(p, str):
                return Partition.parse(p)
            return Partition(tuple(p))

        return cls(coerce(outer), coerce(inner))

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def cells(self) -> List[Cell]:
        """Row-major cells."""
        return [
            (i, j)
            for i in range(1, self.outer.length + 1)
            for j in range(self.inner.row(i) + 1, self.outer.row(i) + 1)
        ]

    def cells_column_major(self) -> List[Cell]:
        return sorted(self.cells(), key=lambda c: (c[1], c[0]))

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return i >= 1 and self.inner.row(i) < j <= self.outer.row(i)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def rotate180(self) -> "SkewDiagram":
        """Rotate inside the mu_1 x mu'_1 bounding box of the outer shape."""
        w, h = self.outer.width, self.outer.height
        outer = tuple(w - self.inner.row(h + 1 - i) for i in range(1, h + 1))
        inner = tuple(w - self.outer.row(h + 1 - i) for i in range(1, h + 1))
        return SkewDiagram(Partition(outer), Partition(inner))

    def canonical(self) -> "SkewDiagram":
        """Translate-equivalent form: empty rows and columns on the top-left removed."""
        rows = [i for i in range(1, self.outer.length + 1) if self.outer.row(i) > self.inner.row(i)]
        if not rows:
            return SkewDiagram(Partition(), Partition())
        top, bottom = rows[0], rows[-1]
        left = min(self.inner.row(i) for i in range(top, bottom + 1))
        outer = tuple(self.outer.row(i) - left for i in range(top, bottom + 1))
        inner = tuple(self.inner.row(i) - left for i in range(top, bottom + 1))
        return SkewDiagram(Partition(outer), Partition(inner))

    def __str__(self):
        if self.is_straight:
            return f"({self.outer})"
        return f"({self.inner})/({self.outer})"


def rotate180(d: SkewDiagram) -> SkewDiagram:
    return d.rotate180()


# --------------------------- (m,n)-index and Maya data ---------------------------


def mn_index(mu: Partition, m: int, n: int) -> int:
    """Smallest j >= 1 with mu_j + m - j <= n - 1."""
    j = 1
    while mu.row(j) + m - j > n - 1:
        j += 1
    return j


@dataclass(frozen=True)
class MayaPair:
    """Column selections of a Wronskian minor."""

    r: Tuple[int, ...]
    s: Tuple[int, ...]


def maya_sequences(mu: Partition, m: int, n: int) -> MayaPair:
    """Maya sequences (r, s) of mu for m bosonic and n fermionic indices."""
    xi = mn_index(mu, m, n)
    if xi > m + 1:
        raise VanishingDiagram(f"(m,n)-index {xi} of ({mu}) exceeds m+1 = {m + 1}")
    s = tuple(mu.row(xi - l) + m - n - xi + l + 1 for l in range(1, xi))
    mu_c = mu.conjugate()
    r = tuple(mu_c.row(n - m + xi - k) + k - xi + 1 for k in range(1, n - m + xi))
    return MayaPair(r=r, s=s)


# ------------------------------ graded tuples ------------------------------


@dataclass(frozen=True)
class GradedTuple:
    """Ordered distinct indices from 1..M+N; index a is bosonic iff a <= M."""

    indices: Tuple[int, ...]
    M: int
    N: int

    def __post_init__(self):
        idx = tuple(int(a) for a in self.indices)
        if len(set(idx)) != len(idx):
            raise ValueError(f"tuple entries must be distinct: {idx}")
        if any(not 1 <= a <= self.M + self.N for a in idx):
            raise ValueError(f"tuple entries must lie in 1..{self.M + self.N}: {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def full(cls, M: int, N: int) -> "GradedTuple":
        return cls(tuple(range(1, M + N + 1)), M, N)

    def grading(self, a: int) -> int:
        return 1 if a <= self.M else -1

    def p(self, pos: int) -> int:
        """Grading of the entry at 1-based position pos."""
        return self.grading(self.indices[pos - 1])

    def __len__(self):
        return len(self.indices)

    @property
    def m(self) -> int:
        return sum(1 for a in self.indices if a <= self.M)

    @property
    def n(self) -> int:
        return len(self.indices) - self.m

    def prefix(self, k: int) -> "GradedTuple":
        return GradedTuple(self.indices[:k], self.M, self.N)

    def suffix_from(self, k: int) -> "GradedTuple":
        """(gamma_k, ..., gamma_K), 1-based."""
        return GradedTuple(self.indices[k - 1 :], self.M, self.N)

    def reversed(self) -> "GradedTuple":
        return GradedTuple(tuple(reversed(self.indices)), self.M, self.N)

    def mask(self) -> int:
        out = 0
        for a in self.indices:
            out |= 1 << (a - 1)
        return out

    def grading_sum(self) -> int:
        return sum(self.grading(a) for a in self.indices)


# ------------------------------ admissible tableaux ------------------------------


@dataclass(frozen=True)
class Tableau:
    """Filling of a skew diagram by tuple positions 1..K, row-major."""

    diagram: SkewDiagram
    entries: Tuple[int, ...]

    def as_dict(self) -> Dict[Cell, int]:
        return dict(zip(self.diagram.cells(), self.entries))


def _bosonic_pos(tup: GradedTuple, pos: int) -> bool:
    return tup.p(pos) == 1


def is_admissible(tup: GradedTuple, d: SkewDiagram, filling: Dict[Cell, int]) -> bool:
    """Rules: weak increase along rows and columns; equal neighbours in a row only for
    bosonic entries, equal neighbours in a column only for fermionic entries."""
    K = len(tup)
    for (i, j), t in filling.items():
        if not 1 <= t <= K:
            return False
        right = filling.get((i, j + 1))
        if right is not None:
            if right < t or (right == t and not _bosonic_pos(tup, t)):
                return False
        below = filling.get((i + 1, j))
        if below is not None:
            if below < t or (below == t and _bosonic_pos(tup, t)):
                return False
    return True


def enumerate_admissible(tup: GradedTuple, d: SkewDiagram, order: str = "row") -> List[Tableau]:
    """Depth-first enumeration of admissible tableaux.

    Args:
        tup: graded tuple whose positions fill the cells
        d: skew diagram
        order: "row" (row-major) or "column" (column-major) generation

    Returns:
        Tableaux with entries listed row-major, in generation order.
    """
    if order not in ("row", "column"):
        raise ValueError(f"order must be 'row' or 'column', got {order!r}")
    cells = d.cells() if order == "row" else d.cells_column_major()
    row_major = d.cells()
    K = len(tup)
    if not cells:
        return [Tableau(d, ())]
    if K == 0:
        return []

    filling: Dict[Cell, int] = {}
    out: List[Tableau] = []

    def lower_bound(cell: Cell) -> int:
        i, j = cell
        lb = 1
        left = filling.get((i, j - 1))
        if left is not None:
            lb = max(lb, left if _bosonic_pos(tup, left) else left + 1)
        up = filling.get((i - 1, j))
        if up is not None:
            lb = max(lb, up + 1 if _bosonic_pos(tup, up) else up)
        return lb

    def rec(k: int):
        if k == len(cells):
            out.append(Tableau(d, tuple(filling[c] for c in row_major)))
            return
        cell = cells[k]
        for t in range(lower_bound(cell), K + 1):
            filling[cell] = t
            rec(k + 1)
        filling.pop(cell, None)

    rec(0)
    logger.debug(f"{len(out)} admissible tableaux for {d} over {tup.indices} ({order}-major)")
    return out


# ------------------------------ hook and labels ------------------------------


def hook_check(mu: Partition, M: int, N: int) -> bool:
    """mu lies in the (M,N)-hook: mu_{M+1} <= N."""
    return mu.row(M + 1) <= N


@dataclass(frozen=True)
class KacDynkin:
    """Kac-Dynkin labels of a hook diagram."""

    labels: Tuple[int, ...]
    typical: bool


def kac_dynkin(mu: Partition, M: int, N: int) -> KacDynkin:
    """Labels b_1..b_{M+N-1} of the gl(M|N) highest weight labelled by mu."""
    if not hook_check(mu, M, N):
        raise HookError(f"({mu}) is outside the ({M},{N})-hook")
    mu_c = mu.conjugate()
    eta = [None] + [max(mu_c.row(j) - M, 0) for j in range(1, N + 2)]
    labels: List[int] = [mu.row(j) - mu.row(j + 1) for j in range(1, M)]
    if M >= 1 and N >= 1:
        labels.append(mu.row(M) + eta[1])
    labels.extend(eta[j] - eta[j + 1] for j in range(1, N))
    typical = True if M == 0 else mu.row(M) >= N
    return KacDynkin(labels=tuple(labels), typical=typical)

"""Admissible subset sequences and closed subsets of the grid digraph.

An admissible sequence is (I_1, ..., I_{n-1}) with I_l an l-element subset
of {1..n} and I_l contained in I_{l+1} together with l+1.  Equivalently,
mapping I to the vertex set {(l, j): j in I_l} of the digraph whose arrows
run (l, j) -> (l+1, j) except when l+1 = j, admissibility becomes closure
under arrows.  Both counts equal h(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

from . import limits


def _mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def _elems(mask: int) -> tuple[int, ...]:
    out = []
    j = 1
    while mask >> j:
        if (mask >> j) & 1:
            out.append(j)
        j += 1
    return tuple(out)


@dataclass(frozen=True)
class AdmissibleSequence:
    """Subsets I_1..I_{n-1} of {1..n}, each stored as a bitmask (bit j = element j)."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if len(self.masks) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} subsets, got {len(self.masks)}")
        full = _mask(range(1, self.n + 1))
        for l, m in enumerate(self.masks, start=1):
            if m & ~full:
                raise ValueError(f"I_{l} contains elements outside 1..{self.n}")
            if bin(m).count("1") != l:
                raise ValueError(f"I_{l} must have exactly {l} elements")
        for l in range(1, self.n - 1):
            allowed = self.masks[l] | (1 << (l + 1))
            if self.masks[l - 1] & ~allowed:
                raise ValueError(f"I_{l} exceeds I_{l + 1} plus {{{l + 1}}}")

    def sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_elems(m) for m in self.masks)

    def json_dict(self) -> dict:
        return {"n": self.n, "sets": [list(s) for s in self.sets()]}

    def render(self) -> str:
        return " | ".join(",".join(str(e) for e in s) for s in self.sets()) or "()"


def enumerate_admissible(
    n: int, visit: Callable[[AdmissibleSequence], None] | None = None
) -> int:
    """Visit every admissible sequence once and return the count.

    Construction runs downward from I_{n-1}: the containment condition makes
    the candidates for I_l exactly the l-subsets of I_{l+1} plus the element
    l+1, so no post-filtering is needed.  For n = 1 the single empty sequence
    is visited.
    """
    if n < 1:
        raise ValueError("n must be positive")
    limits.check_cap("admissible", n)

    count = 0
    stack: list[int] = []  # masks for I_{n-1}, I_{n-2}, ...

    def descend(l: int) -> None:
        nonlocal count
        if l == 0:
            count += 1
            if visit is not None:
                visit(AdmissibleSequence(n, tuple(reversed(stack))))
            return
        if l == n - 1:
            pool = range(1, n + 1)
        else:
            pool = sorted(set(_elems(stack[-1])) | {l + 1})
        for combo in combinations(pool, l):
            stack.append(_mask(combo))
            descend(l - 1)
            stack.pop()

    descend(n - 1)
    return count


def collect_admissible(n: int) -> list[AdmissibleSequence]:
    out: list[AdmissibleSequence] = []
    enumerate_admissible(n, out.append)
    return out


@dataclass(frozen=True)
class GammaGraph:
    """Grid digraph on vertices (l, j), 1 <= l <= n-1, 1 <= j <= n, with an
    arrow (l, j) -> (l+1, j) whenever l+1 differs from j."""

    n: int

    def vertices(self) -> Iterator[tuple[int, int]]:
        for l in range(1, self.n):
            for j in range(1, self.n + 1):
                yield (l, j)

    def has_vertex(self, v: tuple[int, int]) -> bool:
        l, j = v
        return 1 <= l <= self.n - 1 and 1 <= j <= self.n

    def arrow_target(self, v: tuple[int, int]) -> tuple[int, int] | None:
        """The unique outgoing arrow's head, or None when out-degree is 0."""
        l, j = v
        if l + 1 <= self.n - 1 and l + 1 != j:
            return (l + 1, j)
        return None

    def arrows(self) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
        for v in self.vertices():
            t = self.arrow_target(v)
            if t is not None:
                yield (v, t)


def is_closed_in_gamma(subset: Iterable[tuple[int, int]], graph: GammaGraph) -> bool:
    """True iff every arrow starting in the subset also ends in it."""
    vs = set(subset)
    for v in vs:
        if not graph.has_vertex(v):
            raise ValueError(f"vertex {v} outside the graph for n={graph.n}")
    return all(t in vs for v in vs if (t := graph.arrow_target(v)) is not None)


def count_closed_column_graded(n: int) -> int:
    """Count closed subsets with exactly l vertices in column l, for every l.

    Builds the subset column by column (ascending l), extending only when all
    arrows leaving the previous column land in the candidate column.  This
    walks the constraint in the opposite direction from enumerate_admissible,
    so the two counts check each other.
    """
    if n < 1:
        raise ValueError("n must be positive")
    limits.check_cap("admissible", n)
    if n == 1:
        return 1
    graph = GammaGraph(n)

    def extend(l: int, prev: tuple[int, ...]) -> int:
        if l > n - 1:
            return 1
        required = set()
        for j in prev:
            t = graph.arrow_target((l - 1, j))
            if t is not None:
                required.add(t[1])
        total = 0
        for combo in combinations(range(1, n + 1), l):
            if required <= set(combo):
                total += extend(l + 1, combo)
        return total

    return extend(1, ())

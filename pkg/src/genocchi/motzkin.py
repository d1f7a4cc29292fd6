"""Motzkin paths and the path-sum formulas for h(n) and h_n(q).

Three independent routes live here:
  * an exact-rational weighted sum (squares of heights over powers of two),
  * a q-binomial product formula summed over paths, and
  * the same sum rewritten through Laurent-polynomial step weights, where a
    single power of q restores an ordinary polynomial.

Path sums over a generic weight system are computed by level-indexed dynamic
programming; explicit enumeration stays available for termwise checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import limits
from .errors import InternalInconsistencyError
from .exactalg import (
    IntPoly,
    LaurentPoly,
    ONE,
    poly_reverse,
    q_binomial,
)


@dataclass(frozen=True)
class MotzkinPath:
    """Height sequence f_0 .. f_n of a path from (0,0) to (n,0)."""

    heights: tuple[int, ...]

    def __post_init__(self):
        h = self.heights
        if not h:
            raise ValueError("a path needs at least the starting height")
        if h[0] != 0 or h[-1] != 0:
            raise ValueError("path must start and end at height 0")
        if any(v < 0 for v in h):
            raise ValueError("heights must stay nonnegative")
        if any(abs(b - a) > 1 for a, b in zip(h, h[1:])):
            raise ValueError("steps must change height by at most 1")

    @property
    def n(self) -> int:
        return len(self.heights) - 1

    def rises_plus_falls(self) -> int:
        return sum(1 for a, b in zip(self.heights, self.heights[1:]) if a != b)

    def render(self) -> str:
        return " ".join(str(v) for v in self.heights)

    def json_dict(self) -> dict:
        return {"n": self.n, "heights": list(self.heights)}


def enumerate_motzkin(
    n: int, visit: Callable[[MotzkinPath], None] | None = None
) -> int:
    """Visit every length-n path once (next height tried in order
    fall < level < rise) and return the count."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    limits.check_cap("motzkin", n)
    count = 0
    heights = [0]

    def step(k: int) -> None:
        nonlocal count
        if k == n:
            if heights[-1] == 0:
                count += 1
                if visit is not None:
                    visit(MotzkinPath(tuple(heights)))
            return
        h = heights[-1]
        for nxt in (h - 1, h, h + 1):
            if 0 <= nxt <= n - k - 1:
                heights.append(nxt)
                step(k + 1)
                heights.pop()

    step(0)
    return count


def collect_motzkin(n: int) -> list[MotzkinPath]:
    out: list[MotzkinPath] = []
    enumerate_motzkin(n, out.append)
    return out


@dataclass(frozen=True)
class WeightSystem:
    """Level-indexed step weights: flat steps at level m weigh gamma(m),
    rises from m weigh alpha(m), falls to m weigh beta(m)."""

    alpha: Callable[[int], object]
    beta: Callable[[int], object]
    gamma: Callable[[int], object]

    def step_weight(self, a: int, b: int):
        if b == a:
            return self.gamma(a)
        if b == a + 1:
            return self.alpha(a)
        if b == a - 1:
            return self.beta(b)
        raise ValueError(f"not a Motzkin step: {a} -> {b}")


def path_weight(path: MotzkinPath, ws: WeightSystem):
    """Product of step weights along one path (1 for the empty path)."""
    acc = 1
    for a, b in zip(path.heights, path.heights[1:]):
        acc = acc * ws.step_weight(a, b)
    return acc


def weighted_path_sum(n: int, ws: WeightSystem):
    """Sum of path weights over all length-n paths, by transfer-matrix DP.

    Works for any exact coefficient kind closed under + and * (int,
    Fraction, IntPoly, LaurentPoly); the int 1 seeds the empty product.
    """
    if n < 0:
        raise ValueError("path length must be nonnegative")
    limits.check_cap("motzkin", n)
    level: dict[int, object] = {0: 1}
    for k in range(n):
        nxt: dict[int, object] = {}
        top = n - k - 1
        for h, acc in level.items():
            for h2 in (h - 1, h, h + 1):
                if 0 <= h2 <= top:
                    term = acc * ws.step_weight(h, h2)
                    nxt[h2] = nxt[h2] + term if h2 in nxt else term
        level = nxt
    return level[0]


def integer_weight_system() -> WeightSystem:
    """The integer weights whose path sum gives h(n) directly:
    alpha(m) = beta(m) = (m+1)(m+2)/2, gamma(m) = (m+1)^2."""
    half_pair = lambda m: (m + 1) * (m + 2) // 2
    return WeightSystem(alpha=half_pair, beta=half_pair, gamma=lambda m: (m + 1) ** 2)


def laurent_weight_system() -> WeightSystem:
    """Laurent-polynomial weights whose path sum is q^(-n(n-1)/2) h_n(q)."""

    def alpha(m: int) -> LaurentPoly:
        return LaurentPoly(-3 * m, q_binomial(m + 2, 2))

    def beta(m: int) -> LaurentPoly:
        return LaurentPoly(-m - 1, q_binomial(m + 2, 2))

    def gamma(m: int) -> LaurentPoly:
        b = q_binomial(m + 1, 1)
        return LaurentPoly(-2 * m, b * b)

    return WeightSystem(alpha=alpha, beta=beta, gamma=gamma)


def h_motzkin_rational(n: int) -> int:
    """h(n) as the exact rational path sum of (products of squared
    height-plus-ones) over 2^(rises + falls)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = Fraction(0)

    def add(path: MotzkinPath) -> None:
        nonlocal total
        num = 1
        for f in path.heights:
            num *= (1 + f) * (1 + f)
        total += Fraction(num, 1 << path.rises_plus_falls())

    enumerate_motzkin(n, add)
    if total.denominator != 1:
        raise InternalInconsistencyError(f"rational path sum for n={n} is {total}")
    return total.numerator


def q_binomial_or_zero(m: int, n: int) -> IntPoly:
    """Gaussian binomial extended by zero when the lower index exceeds the
    upper; makes the unrestricted product sum agree with the path sum."""
    if n < 0 or n > m:
        return IntPoly()
    return q_binomial(m, n)


def fermionic_exponent(heights: tuple[int, ...]) -> int:
    """Power of q attached to one height vector in the q-binomial formula."""
    n = len(heights) - 1
    return sum((k - heights[k]) * (1 - heights[k] + heights[k + 1]) for k in range(1, n))


def h_poly_fermionic(n: int) -> IntPoly:
    """h_n(q) as the sum over paths of q^exponent times two q-binomial
    products (lower index neighbors the heights on either side)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = IntPoly()

    def add(path: MotzkinPath) -> None:
        nonlocal total
        f = path.heights
        expo = fermionic_exponent(f)
        if expo < 0:
            raise InternalInconsistencyError(
                f"negative exponent {expo} for heights {f}"
            )
        term = ONE
        for k in range(1, n):
            term = term * q_binomial_or_zero(1 + f[k - 1], f[k])
            term = term * q_binomial_or_zero(1 + f[k + 1], f[k])
        total = total + term.shift(expo)

    enumerate_motzkin(n, add)
    return total


def h_poly_laurent(n: int) -> IntPoly:
    """h_n(q) as the Laurent-weight path sum multiplied by q^(n(n-1)/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    raw = weighted_path_sum(n, laurent_weight_system())
    if not isinstance(raw, LaurentPoly):
        raw = LaurentPoly.from_poly(ONE * raw)
    shifted = raw.shift(n * (n - 1) // 2)
    if not shifted.is_zero and shifted.min_exponent < 0:
        raise InternalInconsistencyError(
            f"negative exponents survive the q^{n * (n - 1) // 2} shift at n={n}"
        )
    return shifted.to_poly()


def tilde_h(n: int) -> IntPoly:
    """The coefficient-reversed polynomial q^(n(n-1)/2) h_n(1/q)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    return poly_reverse(h_poly_fermionic(n), n * (n - 1) // 2)

"""Continued-fraction specifications, truncated series expansion, and the
two contraction transforms between Stieltjes and Jacobi forms.

A J-fraction has levels 1/(1 - gamma_k s - lambda_{k+1} s^2 * next); an
S-fraction has levels 1/(1 - c_k s * next) under a constant head c_0; the
affine form adds a constant plus a linear-headed J-style tail.  Expansion
is bottom-up in the ring of truncated power series with exact polynomial
coefficients and needs only inversion of series with constant term 1.

Four named fractions are provided: the two q-fractions generating the
reversed polynomials, the integer fraction generating h(n), and the
classical fraction generating the median numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

from .exactalg import IntPoly, ONE, PowerSeries, q_binomial

CoeffGen = Callable[[int], IntPoly]


def _as_poly(v) -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly((v,))


@dataclass(frozen=True)
class JFraction:
    """gamma(k) for k >= 0 and lam(k) for k >= 1; lam(k) is the product
    weight entering at depth k (it first touches the s^(2k) coefficient)."""

    gamma: CoeffGen
    lam: CoeffGen
    head: IntPoly = field(default_factory=lambda: ONE)


@dataclass(frozen=True)
class SFraction:
    """Head constant c0 and partial numerators c(k) for k >= 1."""

    c: CoeffGen
    c0: IntPoly = field(default_factory=lambda: ONE)


@dataclass(frozen=True)
class AffineSFraction:
    """head + linear * s / (1 - gamma(1) s - lam(1) s^2 / (1 - ...))."""

    head: IntPoly
    linear: IntPoly
    gamma: CoeffGen
    lam: CoeffGen


CFSpec = Union[JFraction, SFraction, AffineSFraction]


def _memoized(gen: CoeffGen) -> CoeffGen:
    cache: dict[int, IntPoly] = {}

    def get(k: int) -> IntPoly:
        if k not in cache:
            cache[k] = _as_poly(gen(k))
        return cache[k]

    return get


def _expand_j_tail(gamma: CoeffGen, lam: CoeffGen, depth: int, order: int) -> PowerSeries:
    tail = PowerSeries.one(order)
    for k in range(depth - 1, -1, -1):
        den = PowerSeries.one(order) - PowerSeries.one(order).scale(gamma(k)).shift_s(1)
        den = den - tail.scale(lam(k + 1)).shift_s(2)
        tail = den.inverse()
    return tail


def expand(spec: CFSpec, order: int, depth: int | None = None) -> PowerSeries:
    """Truncated series of the fraction through s^order.

    The default evaluation depth is chosen so that every discarded level can
    only touch coefficients beyond the truncation order: J-fractions use
    depth ceil(order/2) + 1, S-fractions depth order + 1.  Passing a larger
    depth must not change any returned coefficient (tested, not assumed).
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    if isinstance(spec, JFraction):
        depth = (order + 1) // 2 + 1 if depth is None else depth
        series = _expand_j_tail(_memoized(spec.gamma), _memoized(spec.lam), depth, order)
        return series.scale(spec.head)
    if isinstance(spec, SFraction):
        depth = order + 1 if depth is None else depth
        c = _memoized(spec.c)
        tail = PowerSeries.one(order)
        for k in range(depth, 0, -1):
            den = PowerSeries.one(order) - tail.scale(c(k)).shift_s(1)
            tail = den.inverse()
        return tail.scale(spec.c0)
    if isinstance(spec, AffineSFraction):
        depth = (order + 1) // 2 + 1 if depth is None else depth
        gamma, lam = _memoized(spec.gamma), _memoized(spec.lam)
        # the tail's outermost level holds gamma(1), with lam(1) s^2 below it
        tail = _expand_j_tail(lambda k: gamma(k + 1), lam, depth, order)
        head = PowerSeries.one(order).scale(spec.head)
        return head + tail.scale(spec.linear).shift_s(1)
    raise TypeError(f"not a continued-fraction spec: {spec!r}")


def contract_S_to_J(spec: SFraction) -> JFraction:
    """Pairwise contraction: gamma_0 = c1, gamma_k = c_{2k} + c_{2k+1},
    lambda_k = c_{2k-1} c_{2k}.  Expansions agree to every order."""
    c = _memoized(spec.c)

    def gamma(k: int) -> IntPoly:
        return c(1) if k == 0 else c(2 * k) + c(2 * k + 1)

    def lam(k: int) -> IntPoly:
        return c(2 * k - 1) * c(2 * k)

    return JFraction(gamma=gamma, lam=lam, head=spec.c0)


def contract_S_to_J_affine(spec: SFraction) -> AffineSFraction:
    """Off-diagonal contraction: head c0, linear c0*c1, then
    gamma'_k = c_{2k-1} + c_{2k} and lambda'_k = c_{2k} c_{2k+1}."""
    c = _memoized(spec.c)

    def gamma(k: int) -> IntPoly:
        return c(2 * k - 1) + c(2 * k)

    def lam(k: int) -> IntPoly:
        return c(2 * k) * c(2 * k + 1)

    return AffineSFraction(
        head=spec.c0, linear=spec.c0 * c(1), gamma=gamma, lam=lam
    )


# ---------------------------------------------------------------------------
# the named fractions
# ---------------------------------------------------------------------------


def fraction_f1() -> JFraction:
    """J-fraction generating the reversed polynomials: gamma_k is the squared
    q-integer [k+1], lambda_k is q times the squared Gaussian (k+1 choose 2)."""

    def gamma(k: int) -> IntPoly:
        b = q_binomial(k + 1, 1)
        return b * b

    def lam(k: int) -> IntPoly:
        b = q_binomial(k + 1, 2)
        return (b * b).shift(1)

    return JFraction(gamma=gamma, lam=lam)


def fraction_f2() -> SFraction:
    """S-fraction equivalent of fraction_f1: the Gaussian (k+1 choose 2)
    enters twice, bare at odd depths and multiplied by q at even depths."""

    def c(k: int) -> IntPoly:
        b = q_binomial(k // 2 + 1, 2) if k % 2 == 0 else q_binomial((k + 1) // 2 + 1, 2)
        return b.shift(1) if k % 2 == 0 else b

    return SFraction(c=c)


def fraction_hn() -> SFraction:
    """Integer S-fraction generating h(n): numerators 1,1,3,3,6,6,10,10,...
    (each triangular number twice)."""

    def c(k: int) -> IntPoly:
        m = (k + 1) // 2
        return IntPoly((m * (m + 1) // 2,))

    return SFraction(c=c)


def fraction_viennot() -> SFraction:
    """Integer S-fraction generating the median numbers: numerators
    1,1,4,4,9,9,... (each square twice)."""

    def c(k: int) -> IntPoly:
        m = (k + 1) // 2
        return IntPoly((m * m,))

    return SFraction(c=c)


NAMED_FRACTIONS: dict[str, Callable[[], CFSpec]] = {
    "f1": fraction_f1,
    "f2": fraction_f2,
    "hn": fraction_hn,
    "viennot": fraction_viennot,
}


def tilde_h_series(order: int, via: str = "f1") -> PowerSeries:
    """Generating series of the reversed polynomials through s^order."""
    if via not in ("f1", "f2"):
        raise ValueError(f"via must be 'f1' or 'f2', got {via!r}")
    return expand(NAMED_FRACTIONS[via](), order)


def spec_from_dict(data: dict) -> CFSpec:
    """Build a spec from a parsed description.

    Accepts {"preset": name}, {"kind": "J", "gamma": [...], "lambda": [...]}
    or {"kind": "S", "c0": int, "c": [...]}.  Listed coefficients are integers
    indexed from the fraction's first depth; depths beyond the list are zero,
    which terminates the fraction.
    """
    if "preset" in data:
        name = data["preset"]
        if name not in NAMED_FRACTIONS:
            raise ValueError(f"unknown preset {name!r}")
        return NAMED_FRACTIONS[name]()
    kind = data.get("kind")
    if kind == "J":
        gammas = [int(v) for v in data.get("gamma", [])]
        lams = [int(v) for v in data.get("lambda", [])]
        return JFraction(
            gamma=lambda k: IntPoly((gammas[k],)) if k < len(gammas) else IntPoly(),
            lam=lambda k: IntPoly((lams[k - 1],)) if 1 <= k <= len(lams) else IntPoly(),
        )
    if kind == "S":
        cs = [int(v) for v in data.get("c", [])]
        c0 = int(data.get("c0", 1))
        return SFraction(
            c=lambda k: IntPoly((cs[k - 1],)) if 1 <= k <= len(cs) else IntPoly(),
            c0=IntPoly((c0,)),
        )
    raise ValueError("spec must contain 'preset' or kind 'J'/'S'")

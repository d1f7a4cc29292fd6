"""Exact polynomial arithmetic over the integers, plus q-combinatorial primitives.

Everything here is integer-exact: polynomials carry Python ints (arbitrary
precision), divisions either succeed exactly or raise InexactDivisionError,
and no floating point appears anywhere.

Types:
  IntPoly     dense polynomial in q, ascending coefficients, no trailing zeros
  LaurentPoly IntPoly shifted by an integer exponent offset (negative powers ok)
  BivarPoly   polynomial in x whose coefficients are IntPoly values in q
  PowerSeries truncated series in s with IntPoly coefficients

Rationals are fractions.Fraction, which already maintains the canonical form
(positive denominator, reduced) this package needs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import InexactDivisionError

Coefficient = Union[int, Fraction]


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Dense univariate polynomial in q with integer coefficients.

    coeffs[i] is the coefficient of q^i; the last stored coefficient is
    nonzero (the zero polynomial stores nothing).  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def constant_term(self) -> int:
        return self.coefficient(0)

    @property
    def leading_coefficient(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value: Coefficient) -> Coefficient:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        # constants hash like the int they equal
        if len(self.coeffs) < 2:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- rendering ---------------------------------------------------------

    def render(self, var: str = "q") -> str:
        """Ascending-power text form, e.g. '1 + 2*q + 3*q^2 + q^3'."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = var if mag == 1 else f"{mag}*{var}"
            else:
                term = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def coeff_strings(self) -> list[str]:
        """Coefficients as decimal strings, for JSON payloads."""
        return [str(c) for c in self.coeffs] if self.coeffs else ["0"]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"IntPoly({self.coeffs!r})"


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))


def poly_reverse(p: IntPoly, d: int) -> IntPoly:
    """Return q^d * p(1/q): coefficient i of the result is coefficient d-i of p."""
    if d < 0:
        raise ValueError("reversal degree must be nonnegative")
    if not p.is_zero and p.degree > d:
        raise ValueError(f"cannot reverse degree-{p.degree} polynomial at d={d}")
    return IntPoly(tuple(p.coefficient(d - i) for i in range(d + 1)))


def poly_exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """Exact division over integer polynomials.

    Returns the quotient when num = quotient * den holds exactly; raises
    InexactDivisionError otherwise (nonzero remainder, or a non-integer
    leading quotient at any step).
    """
    if den.is_zero:
        raise ValueError("division by the zero polynomial")
    if num.is_zero:
        return ZERO
    if num.degree < den.degree:
        raise InexactDivisionError(f"({num}) is not divisible by ({den})")
    rem = list(num.coeffs)
    d = den.coeffs
    lead = d[-1]
    qlen = len(rem) - len(d) + 1
    quot = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        c = rem[i + len(d) - 1]
        if c % lead:
            raise InexactDivisionError(f"({num}) is not divisible by ({den})")
        qc = c // lead
        quot[i] = qc
        if qc:
            for j, dj in enumerate(d):
                rem[i + j] -= qc * dj
    if any(rem):
        raise InexactDivisionError(f"({num}) is not divisible by ({den})")
    return IntPoly(quot)


# ---------------------------------------------------------------------------
# q-combinatorial primitives
# ---------------------------------------------------------------------------


def q_int(n: int) -> IntPoly:
    """The q-integer [n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q-integer index must be nonnegative")
    return IntPoly((1,) * n)


def q_factorial(n: int) -> IntPoly:
    """[n]_q! as an exact product of q-integers."""
    result = ONE
    for i in range(1, n + 1):
        result = result * q_int(i)
    return result


@lru_cache(maxsize=None)
def q_binomial(m: int, n: int) -> IntPoly:
    """Gaussian binomial coefficient as an integer polynomial in q.

    Computed by the q-Pascal recurrence, which is division-free and keeps
    every intermediate value integral.  Degree is n*(m-n); the value at
    q=1 is the ordinary binomial coefficient.
    """
    if n < 0 or m < 0 or n > m:
        raise ValueError(f"q_binomial requires 0 <= n <= m, got m={m}, n={n}")
    if n == 0 or n == m:
        return ONE
    return q_binomial(m - 1, n - 1) + q_binomial(m - 1, n).shift(n)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """An IntPoly shifted by an integer exponent offset.

    Represents q^offset * body, where the body has a nonzero constant term
    (or is zero, in which case the offset is 0).
    """

    __slots__ = ("offset", "body")

    def __init__(self, offset: int, body: IntPoly):
        lead = 0
        coeffs = body.coeffs
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        if lead == len(coeffs):
            offset, coeffs = 0, ()
        elif lead:
            offset, coeffs = offset + lead, coeffs[lead:]
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "body", IntPoly(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_poly(cls, p: IntPoly) -> "LaurentPoly":
        return cls(0, p)

    @property
    def is_zero(self) -> bool:
        return self.body.is_zero

    @property
    def min_exponent(self) -> int:
        if self.is_zero:
            raise ValueError("zero Laurent polynomial has no exponents")
        return self.offset

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k (k may be negative)."""
        if self.is_zero:
            return self
        return LaurentPoly(self.offset + k, self.body)

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, IntPoly):
            return LaurentPoly(0, other)
        if isinstance(other, int):
            return LaurentPoly(0, IntPoly((other,)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        off = min(self.offset, other.offset)
        return LaurentPoly(
            off,
            self.body.shift(self.offset - off) + other.body.shift(other.offset - off),
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.offset, -self.body)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.offset + other.offset, self.body * other.body)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.offset == other.offset and self.body == other.body

    def __hash__(self):
        # pure-polynomial values hash like the IntPoly they equal
        return hash(self.body) if self.offset == 0 else hash((self.offset, self.body))

    def to_poly(self) -> IntPoly:
        """Convert to an ordinary polynomial; fails if any exponent is negative."""
        if self.is_zero:
            return ZERO
        if self.offset < 0:
            raise ValueError(f"negative exponent q^{self.offset} survives")
        return self.body.shift(self.offset)

    def __repr__(self):
        return f"LaurentPoly({self.offset}, {self.body!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        if self.offset == 0:
            return str(self.body)
        return f"q^{self.offset}*({self.body})"


# ---------------------------------------------------------------------------
# Bivariate polynomials in x over IntPoly coefficients
# ---------------------------------------------------------------------------


def _trim_polys(polys: list) -> tuple:
    while polys and polys[-1].is_zero:
        polys.pop()
    return tuple(polys)


class BivarPoly:
    """Polynomial in x whose coefficients are IntPoly values in q.

    x_coeffs[i] is the q-polynomial coefficient of x^i; the last stored
    coefficient is nonzero.
    """

    __slots__ = ("x_coeffs",)

    def __init__(self, x_coeffs: Iterable = ()):
        polys = [c if isinstance(c, IntPoly) else IntPoly((c,)) for c in x_coeffs]
        object.__setattr__(self, "x_coeffs", _trim_polys(polys))

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.x_coeffs

    @property
    def x_degree(self) -> int:
        if not self.x_coeffs:
            raise ValueError("x-degree of the zero polynomial is undefined")
        return len(self.x_coeffs) - 1

    def x_coefficient(self, i: int) -> IntPoly:
        return self.x_coeffs[i] if 0 <= i < len(self.x_coeffs) else ZERO

    @staticmethod
    def _coerce(other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (IntPoly, int)):
            return BivarPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.x_coeffs, other.x_coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly(tuple(-c for c in self.x_coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.x_coeffs, other.x_coeffs
        if not a or not b:
            return BivarPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca.is_zero:
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.x_coeffs == other.x_coeffs

    def __hash__(self):
        # x-constant values hash like the IntPoly they equal
        if len(self.x_coeffs) < 2:
            return hash(self.x_coeffs[0] if self.x_coeffs else 0)
        return hash(self.x_coeffs)

    def substitute_x(self, s: "BivarPoly") -> "BivarPoly":
        """Compose with x -> s(x), leaving q-coefficients untouched (Horner)."""
        result = BivarPoly()
        for c in reversed(self.x_coeffs):
            result = result * s + BivarPoly((c,))
        return result

    def at_x_one(self) -> IntPoly:
        """Evaluate at x = 1, yielding a polynomial in q."""
        total = ZERO
        for c in self.x_coeffs:
            total = total + c
        return total

    def __repr__(self):
        return f"BivarPoly({self.x_coeffs!r})"


def bivar_exact_div_by_unit_const(num: BivarPoly, den: BivarPoly) -> BivarPoly:
    """Exact division of bivariate polynomials, ascending in powers of x.

    Requires the divisor's x-constant coefficient to be the unit polynomial 1,
    which makes every quotient step division-free.  Raises
    InexactDivisionError if the remainder is not exactly zero.
    """
    if den.is_zero or den.x_coefficient(0) != ONE:
        raise ValueError("divisor must have x-constant coefficient 1")
    if num.is_zero:
        return BivarPoly()
    bound = num.x_degree - den.x_degree
    if bound < 0:
        raise InexactDivisionError("bivariate division leaves a remainder")
    rem = list(num.x_coeffs) + [ZERO] * (den.x_degree + 1)
    quot = [ZERO] * (bound + 1)
    for i in range(bound + 1):
        c = rem[i]
        if c.is_zero:
            continue
        quot[i] = c
        for j, dj in enumerate(den.x_coeffs):
            rem[i + j] = rem[i + j] - c * dj
    if any(not c.is_zero for c in rem):
        raise InexactDivisionError("bivariate division leaves a remainder")
    return BivarPoly(quot)


# ---------------------------------------------------------------------------
# Truncated power series in s with IntPoly coefficients
# ---------------------------------------------------------------------------


class PowerSeries:
    """Power series in s truncated at s^order (inclusive), IntPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        polys = tuple(c if isinstance(c, IntPoly) else IntPoly((c,)) for c in coeffs)
        if len(polys) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(polys)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", polys)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls(order, (ZERO,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls(order, (ONE,) + (ZERO,) * order)

    def coefficient(self, n: int) -> IntPoly:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def _check_order(self, other: "PowerSeries"):
        if self.order != other.order:
            raise ValueError("power series truncation orders differ")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_order(other)
        return PowerSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_order(other)
        return PowerSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_order(other)
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(self.order, out)

    def scale(self, p) -> "PowerSeries":
        p = p if isinstance(p, IntPoly) else IntPoly((p,))
        return PowerSeries(self.order, tuple(c * p for c in self.coeffs))

    def shift_s(self, k: int) -> "PowerSeries":
        """Multiply by s^k, truncating at the same order."""
        if k < 0:
            raise ValueError("series shift must be nonnegative")
        if k > self.order:
            return PowerSeries.zero(self.order)
        out = (ZERO,) * k + self.coeffs[: self.order + 1 - k]
        return PowerSeries(self.order, out)

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse, requiring constant term 1."""
        if self.coeffs[0] != ONE:
            raise ValueError("series inversion requires constant term 1")
        inv = [ONE] + [ZERO] * self.order
        for n in range(1, self.order + 1):
            acc = ZERO
            for i in range(1, n + 1):
                a = self.coeffs[i]
                if not a.is_zero:
                    acc = acc + a * inv[n - i]
            inv[n] = -acc
        return PowerSeries(self.order, inv)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(order, self.coeffs[: order + 1])

    def evaluate_q(self, value: Coefficient) -> list:
        """Specialize q in every coefficient, e.g. value=1 for counting."""
        return [c(value) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"

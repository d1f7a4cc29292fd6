"""Cross-check orchestrator.

Runs every independent route to h(n), h_n(q), the reversed polynomials and
the generating-function identities, and collects one pass/fail/skipped line
per check.  Failures are reported, never raised; the CLI turns a nonzero
failure count into a nonzero exit status.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .admissible import count_closed_column_graded, enumerate_admissible
from .contfrac import (
    SFraction,
    contract_S_to_J,
    contract_S_to_J_affine,
    expand,
    fraction_f1,
    fraction_f2,
    fraction_hn,
    fraction_viennot,
)
from .dellac import enumerate_dellac, h_poly_dellac
from .errors import ResourceLimitError
from .exactalg import IntPoly
from .hanzeng import hanzeng_barc
from .motzkin import (
    h_motzkin_rational,
    h_poly_fermionic,
    h_poly_laurent,
    integer_weight_system,
    tilde_h,
    weighted_path_sum,
)
from .oracles import DUMONT_MAX_N, TRIANGLE_MAX_N, count_dumont, count_triangle_pairs
from .seidel import median_genocchi, normalized_h

CROSSCHECK_MAX_N = 8
CONTRACTION_ORDER = 10
RANDOM_INSTANCES = 100
DIVISIBILITY_MAX_N = 12

# per-model caps are data: checks consult this table to trim their ranges
MODEL_CAPS = {
    "dumont": DUMONT_MAX_N,
    "triangles": TRIANGLE_MAX_N,
    "divisibility": DIVISIBILITY_MAX_N,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    range: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str


@dataclass
class CheckReport:
    n_max: int
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    def json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "seed": self.seed,
            "checks": [
                {"name": c.name, "range": c.range, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
            "failures": self.failures,
        }

    def table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [
            f"{c.status.upper():7} {c.name:{width}}  {c.range:12} {c.detail}"
            for c in self.checks
        ]
        lines.append(f"{len(self.checks)} checks, {self.failures} failure(s), seed={self.seed}")
        return "\n".join(lines)


def _mismatch(label: str, lhs, rhs) -> str:
    return f"{label}: {lhs} != {rhs}"


def crosscheck(n_max: int, seed: int = 0) -> CheckReport:
    """Run the full check matrix through the given bound (1 <= n_max <= 8)."""
    if not 1 <= n_max <= CROSSCHECK_MAX_N:
        raise ValueError(f"n_max must be between 1 and {CROSSCHECK_MAX_N}")
    report = CheckReport(n_max=n_max, seed=seed)

    def run(name: str, rng_text: str, fn) -> None:
        try:
            problems = fn()
        except ResourceLimitError as exc:
            report.checks.append(CheckResult(name, rng_text, "skipped", str(exc)))
            return
        except Exception as exc:  # a crashed check is a failed check
            report.checks.append(CheckResult(name, rng_text, "fail", repr(exc)))
            return
        if problems:
            report.checks.append(CheckResult(name, rng_text, "fail", "; ".join(problems)))
        else:
            report.checks.append(CheckResult(name, rng_text, "pass", _details.pop(name, "ok")))

    _details: dict[str, str] = {}

    # (1) every counting model agrees with the triangle
    def counts_agree() -> list[str]:
        problems = []
        ws = integer_weight_system()
        for n in range(1, n_max + 1):
            expected = normalized_h(n)
            for label, got in (
                ("dellac", enumerate_dellac(n)),
                ("admissible", enumerate_admissible(n)),
                ("closed-subsets", count_closed_column_graded(n)),
                ("motzkin-rational", h_motzkin_rational(n)),
                ("motzkin-weights", weighted_path_sum(n, ws)),
            ):
                if got != expected:
                    problems.append(_mismatch(f"{label} n={n}", got, expected))
        _details["counts-agree"] = "h-values: " + ",".join(
            str(normalized_h(n)) for n in range(n_max + 1)
        )
        return problems

    run("counts-agree", f"n=1..{n_max}", counts_agree)

    # (2) brute-force oracles on their own ranges
    dmax = min(n_max, MODEL_CAPS["dumont"])
    run(
        "dumont-oracle",
        f"n=1..{dmax}",
        lambda: [
            _mismatch(f"n={n}", count_dumont(n), normalized_h(n))
            for n in range(1, dmax + 1)
            if count_dumont(n) != normalized_h(n)
        ],
    )

    tmax = min(n_max, MODEL_CAPS["triangles"])
    run(
        "triangle-pairs-oracle",
        f"n=1..{tmax}",
        lambda: [
            _mismatch(f"n={n}", count_triangle_pairs(n), normalized_h(n + 1))
            for n in range(1, tmax + 1)
            if count_triangle_pairs(n) != normalized_h(n + 1)
        ],
    )

    # (3) the three q-polynomial routes coincide
    def three_way() -> list[str]:
        problems = []
        for n in range(1, n_max + 1):
            a, b, c = h_poly_dellac(n), h_poly_fermionic(n), h_poly_laurent(n)
            if a != b:
                problems.append(_mismatch(f"dellac/fermionic n={n}", a, b))
            if b != c:
                problems.append(_mismatch(f"fermionic/laurent n={n}", b, c))
        return problems

    run("hq-three-way", f"n=1..{n_max}", three_way)

    # (4) both named q-fractions generate the reversed polynomials
    def series_check(via: str):
        def check() -> list[str]:
            series = expand({"f1": fraction_f1, "f2": fraction_f2}[via](), n_max)
            return [
                _mismatch(f"n={n}", series.coefficient(n), tilde_h(n))
                for n in range(n_max + 1)
                if series.coefficient(n) != tilde_h(n)
            ]

        return check

    run("series-f1", f"n=0..{n_max}", series_check("f1"))
    run("series-f2", f"n=0..{n_max}", series_check("f2"))

    # (5) the normalized recurrence polynomials match the reversed polynomials
    run(
        "hanzeng-reversal",
        f"n=0..{n_max}",
        lambda: [
            _mismatch(f"n={n}", hanzeng_barc(n + 1), tilde_h(n))
            for n in range(n_max + 1)
            if hanzeng_barc(n + 1) != tilde_h(n)
        ],
    )

    # (6) q = 1 chain
    def q1_series() -> list[str]:
        at_one = expand(fraction_f1(), n_max).evaluate_q(1)
        plain = expand(fraction_hn(), n_max).evaluate_q(1)
        return [
            _mismatch(f"n={n}", at_one[n], plain[n])
            for n in range(n_max + 1)
            if at_one[n] != plain[n]
        ]

    run("q1-hn-series", f"n=0..{n_max}", q1_series)

    def viennot_doubling() -> list[str]:
        series = expand(fraction_viennot(), n_max).evaluate_q(1)
        problems = []
        if series[0] != 1:
            problems.append(_mismatch("n=0", series[0], 1))
        for n in range(1, n_max + 1):
            expected = median_genocchi(n)
            if series[n] != expected:
                problems.append(_mismatch(f"n={n}", series[n], expected))
            if expected != (1 << (n - 1)) * normalized_h(n - 1):
                problems.append(
                    _mismatch(f"doubling n={n}", expected, (1 << (n - 1)) * normalized_h(n - 1))
                )
        return problems

    run("viennot-doubling", f"n=0..{n_max}", viennot_doubling)

    # (7) power-of-two divisibility
    dvmax = MODEL_CAPS["divisibility"]
    run(
        "divisibility",
        f"n=1..{dvmax}",
        lambda: [
            f"H({2 * n + 1}) not divisible by 2^{n}"
            for n in range(1, dvmax + 1)
            if median_genocchi(n + 1) % (1 << n)
        ],
    )

    # (8) contraction transforms on the named fractions and on random instances
    def contraction_named() -> list[str]:
        problems = []
        f2 = fraction_f2()
        lhs = expand(f2, CONTRACTION_ORDER)
        if expand(contract_S_to_J(f2), CONTRACTION_ORDER) != lhs:
            problems.append("pairwise contraction of the q-fraction disagrees")
        if expand(contract_S_to_J(f2), CONTRACTION_ORDER) != expand(
            fraction_f1(), CONTRACTION_ORDER
        ):
            problems.append("contracted q-fraction does not recover the J-form")
        vi = fraction_viennot()
        if expand(contract_S_to_J_affine(vi), CONTRACTION_ORDER) != expand(
            vi, CONTRACTION_ORDER
        ):
            problems.append("affine contraction of the median fraction disagrees")
        return problems

    run("contraction-named", f"order={CONTRACTION_ORDER}", contraction_named)

    def contraction_random() -> list[str]:
        rng = random.Random(seed)
        problems = []
        for trial in range(RANDOM_INSTANCES):
            values = [rng.randint(1, 5) for _ in range(2 * CONTRACTION_ORDER + 2)]
            spec = SFraction(
                c=lambda k, v=tuple(values): IntPoly((v[k - 1],)) if k <= len(v) else IntPoly()
            )
            reference = expand(spec, CONTRACTION_ORDER)
            if expand(contract_S_to_J(spec), CONTRACTION_ORDER) != reference:
                problems.append(f"pairwise contraction fails on trial {trial}")
            if expand(contract_S_to_J_affine(spec), CONTRACTION_ORDER) != reference:
                problems.append(f"affine contraction fails on trial {trial}")
        _details["contraction-random"] = f"{RANDOM_INSTANCES} instances, seed={seed}"
        return problems

    run("contraction-random", f"order={CONTRACTION_ORDER}", contraction_random)

    report.checks.sort(key=lambda c: c.name)
    return report

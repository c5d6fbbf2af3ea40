"""Symbolic endomorphism ring of the bivalent module (x, y)/(x², xy).

Over K[x, y] with x² = xy = 0, the module M = (x, y)/(x², xy) splits as
a one-dimensional socle K·x plus a polynomial stream y·K[y].  Every
endomorphism is pinned down by a triple (u, v, p):

    f(x) = u·x          f(y) = v·x + p(y)·y

because f(x) must land in the part killed by both variables (the line
K·x) and q(y)·x = q(0)·x collapses polynomial coefficients on x.  The
ring structure is computed exactly on truncated polynomials; every
identity asserted here is degree-bounded, so truncation never lies
as long as the working order is at least the degrees involved.

Composition (apply g, then f):

    u = u_f·u_g,   v = u_f·v_g + v_f·p_g(0),   p = p_f·p_g mod y^N

Classification facts verified by the check suite:
  * nilpotent  ⟺  u = 0 and p = 0   (then f² = 0 outright)
  * bijective  ⟺  u ≠ 0 and p(0) ≠ 0
  * monic      ⟺  u ≠ 0 and p ≠ 0
  * the kernel of a nonzero nilpotent is (x, y²)/(x², xy), an open
    submodule (same transfinite length ω + 1 as M)
  * the nilpotents form a two-sided ideal with square zero, all
    commutators land in it, and the quotient ring is commutative
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .reporting import CheckResult

Scalar = int | Fraction

DEFAULT_TRUNCATION = 8


def poly_mul(p: Sequence[Scalar], q: Sequence[Scalar], order: int) -> tuple[Scalar, ...]:
    out = [0] * order
    for i, a in enumerate(p):
        if a == 0 or i >= order:
            continue
        for j, b in enumerate(q):
            if i + j >= order:
                break
            if b:
                out[i + j] += a * b
    return tuple(out)


def poly_add(p: Sequence[Scalar], q: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(a + b for a, b in zip(p, q))


def poly_inverse(p: Sequence[Scalar], order: int) -> tuple[Scalar, ...]:
    """Power-series inverse truncated at the given order; p[0] must be a unit."""
    if not p or p[0] == 0:
        raise ValueError("constant term is zero; no power-series inverse")
    inv = [Fraction(1, 1) / p[0]] + [Fraction(0)] * (order - 1)
    for k in range(1, order):
        acc = sum(p[i] * inv[k - i] for i in range(1, min(k, len(p) - 1) + 1))
        inv[k] = -acc / p[0]
    return tuple(inv)


@dataclass(frozen=True)
class EndoTriple:
    """The endomorphism f(x) = u·x, f(y) = v·x + p(y)·y, with p truncated."""

    u: Scalar
    v: Scalar
    p: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.p) < 1:
            raise ValueError("truncation order must be at least 1")

    @property
    def order(self) -> int:
        return len(self.p)

    @classmethod
    def zero(cls, order: int = DEFAULT_TRUNCATION) -> "EndoTriple":
        return cls(0, 0, (0,) * order)

    @classmethod
    def identity(cls, order: int = DEFAULT_TRUNCATION) -> "EndoTriple":
        return cls(1, 0, (1,) + (0,) * (order - 1))

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0 and not any(self.p)

    def __str__(self) -> str:
        terms = " + ".join(
            f"{c}*y^{k}" if k else str(c) for k, c in enumerate(self.p) if c
        ) or "0"
        return f"(u={self.u}, v={self.v}, p={terms})"


def _check_orders(f: EndoTriple, g: EndoTriple) -> int:
    if f.order != g.order:
        raise ValueError(f"truncation mismatch: {f.order} vs {g.order}")
    return f.order


def endo_add(f: EndoTriple, g: EndoTriple) -> EndoTriple:
    _check_orders(f, g)
    return EndoTriple(f.u + g.u, f.v + g.v, poly_add(f.p, g.p))


def endo_neg(f: EndoTriple) -> EndoTriple:
    return EndoTriple(-f.u, -f.v, tuple(-c for c in f.p))


def endo_sub(f: EndoTriple, g: EndoTriple) -> EndoTriple:
    return endo_add(f, endo_neg(g))


def endo_compose(f: EndoTriple, g: EndoTriple) -> EndoTriple:
    """f after g; the v-slot picks up only g's constant term since q(y)·x = q(0)·x."""
    order = _check_orders(f, g)
    return EndoTriple(
        f.u * g.u,
        f.u * g.v + f.v * g.p[0],
        poly_mul(f.p, g.p, order),
    )


def endo_power(f: EndoTriple, k: int) -> EndoTriple:
    out = EndoTriple.identity(f.order)
    for _ in range(k):
        out = endo_compose(out, f)
    return out


def commutator(f: EndoTriple, g: EndoTriple) -> EndoTriple:
    return endo_sub(endo_compose(f, g), endo_compose(g, f))


def is_nilpotent(f: EndoTriple) -> bool:
    """u = 0 and p = 0; then f² = 0 already.  Exact despite truncation:
    a nonzero p stays nonzero under every power in K[y]."""
    return f.u == 0 and not any(f.p)


def is_bijective(f: EndoTriple) -> bool:
    return f.u != 0 and f.p[0] != 0


def is_monic(f: EndoTriple) -> bool:
    """Injectivity: the kernel {a·x + q·y : p·q = 0, a·u + q(0)·v = 0}
    vanishes exactly when u ≠ 0 and p ≠ 0."""
    return f.u != 0 and any(f.p)


def classify(f: EndoTriple) -> str:
    if is_nilpotent(f):
        return "nilpotent"
    if is_bijective(f):
        return "bijective"
    return "other"


def invert(f: EndoTriple) -> EndoTriple:
    if not is_bijective(f):
        raise ValueError("only bijective triples (u ≠ 0, p(0) ≠ 0) are invertible")
    q = poly_inverse(f.p, f.order)
    u = Fraction(1, 1) / f.u
    return EndoTriple(u, -Fraction(f.v) / (f.u * f.p[0]), q)


def kernel_is_open(f: EndoTriple) -> bool:
    """Whether ker f has the same transfinite length (ω + 1) as M.

    Case analysis on (u, p): the kernel is M itself (zero map),
    (x, y²)/(x², xy) for a nonzero nilpotent (length ω + 1), the socle
    line K·x when u = 0 ≠ p (length 1), a single polynomial stream when
    p = 0 ≠ u (length ω), and zero when f is monic.  Open happens
    exactly in the nilpotent cases.
    """
    return is_nilpotent(f)


def kernel_description(f: EndoTriple) -> str:
    if f.is_zero():
        return "M"
    if is_nilpotent(f):
        return "(x, y^2)"
    if f.u == 0:
        return "K*x"
    if not any(f.p):
        return "one polynomial stream"
    return "0"


# ----------------------------------------------------------------------
# the exhaustive / randomized law suite
# ----------------------------------------------------------------------


def _grid(order: int, lo: int = -2, hi: int = 2) -> list[EndoTriple]:
    """Triples with u, v and the two lowest p-coefficients ranging over
    a small box; higher p-coefficients stay zero so the grid stays
    quadratic-law sized."""
    tail = (0,) * (order - 2)
    rng = range(lo, hi + 1)
    return [
        EndoTriple(u, v, (c0, c1) + tail)
        for u, v, c0, c1 in itertools.product(rng, rng, rng, rng)
    ]


def _random_triple(rng: random.Random, order: int) -> EndoTriple:
    return EndoTriple(
        rng.randint(-9, 9),
        rng.randint(-9, 9),
        tuple(rng.randint(-9, 9) for _ in range(order)),
    )


def check_endo_fixture(
    order: int = DEFAULT_TRUNCATION,
    lo: int = -2,
    hi: int = 2,
    seed: int = 0,
    samples: int = 200,
) -> list[CheckResult]:
    """Every ring-theoretic claim about the (u, v, p) fixture, checked
    exhaustively on the coefficient grid and sampled for the cubic laws."""
    if order < 4:
        raise ValueError("truncation order must be at least 4")
    results: list[CheckResult] = []
    grid = _grid(order, lo, hi)
    ident = EndoTriple.identity(order)
    zero = EndoTriple.zero(order)

    def record(name: str, bad: EndoTriple | tuple | None, detail: str):
        if bad is None:
            results.append(CheckResult(name, True, detail))
        else:
            results.append(
                CheckResult(name, False, f"witness: {bad}", {"witness": str(bad)})
            )

    bad = next(
        (
            f
            for f in grid
            if endo_compose(f, ident) != f or endo_compose(ident, f) != f
        ),
        None,
    )
    record("endo-identity", bad, f"two-sided identity on {len(grid)} triples")

    bad = next((f for f in grid if is_nilpotent(f) != endo_power(f, 2).is_zero()), None)
    record("endo-nilpotent-square", bad, "nilpotent ⟺ f² = 0 on the grid")

    bad = None
    for f in grid:
        if not is_bijective(f):
            continue
        g = invert(f)
        if endo_compose(f, g) != ident or endo_compose(g, f) != ident:
            bad = f
            break
    record("endo-bijective-inverse", bad, "u≠0, p(0)≠0 triples invert two-sidedly")

    nilpotents = [f for f in grid if is_nilpotent(f)]
    bad = next(
        (
            (f, n)
            for n in nilpotents
            for f in grid
            if not is_nilpotent(endo_compose(f, n))
            or not is_nilpotent(endo_compose(n, f))
            or not is_nilpotent(endo_add(n, endo_neg(nilpotents[0])))
        ),
        None,
    )
    record("endo-nil-ideal", bad, "nilpotents absorb composition both sides")

    bad = next(
        (
            (a, b)
            for a in nilpotents
            for b in nilpotents
            if not endo_compose(a, b).is_zero()
        ),
        None,
    )
    record("endo-nil-square-zero", bad, "product of any two nilpotents vanishes")

    bad = None
    for f, g in itertools.combinations(grid, 2):
        if not is_nilpotent(commutator(f, g)):
            bad = (f, g)
            break
    record(
        "endo-commutators-nil",
        bad,
        f"all commutators over {len(grid)} triples lie in the nil ideal",
    )

    f = EndoTriple(0, 1, (0,) * order)
    g = EndoTriple(2, 0, (1,) + (0,) * (order - 1))
    c = commutator(f, g)
    record(
        "endo-noncommutative",
        None if (not c.is_zero() and is_nilpotent(c)) else (f, g),
        f"nonzero commutator witness {c}",
    )

    bad = next(
        (
            (f, n)
            for f in grid
            if is_monic(f)
            for n in nilpotents
            if not is_monic(endo_add(f, n))
        ),
        None,
    )
    record("endo-monic-plus-nil", bad, "monic + nilpotent stays monic")

    bad = None
    for c_unit in range(lo, hi + 1):
        if c_unit == 0:
            continue
        central = EndoTriple(c_unit, 0, (c_unit,) + (0,) * (order - 1))
        for n in nilpotents:
            s = endo_add(central, n)
            if not is_bijective(s):
                bad = s
                break
    record("endo-central-unit-plus-nil", bad, "central unit + nilpotent invertible")

    bad = next((f for f in grid if kernel_is_open(f) != is_nilpotent(f)), None)
    record("endo-kernel-open-iff-nil", bad, "kernel open exactly for nilpotents")

    rng = random.Random(seed)
    bad = None
    for _ in range(samples):
        a, b, c = (_random_triple(rng, order) for _ in range(3))
        if endo_compose(endo_compose(a, b), c) != endo_compose(a, endo_compose(b, c)):
            bad = (a, b, c)
            break
        if endo_compose(a, endo_add(b, c)) != endo_add(
            endo_compose(a, b), endo_compose(a, c)
        ):
            bad = (a, b, c)
            break
        if endo_compose(endo_add(a, b), c) != endo_add(
            endo_compose(a, c), endo_compose(b, c)
        ):
            bad = (a, b, c)
            break
    record(
        "endo-ring-laws",
        bad,
        f"associativity and distributivity on {samples} random triples",
    )

    bad = next(
        (f for f in grid if is_nilpotent(f) and not f.is_zero()
         and kernel_description(f) != "(x, y^2)"),
        None,
    )
    record("endo-nil-kernel", bad, "nonzero nilpotents all have kernel (x, y²)")

    assert zero.is_zero()
    return results

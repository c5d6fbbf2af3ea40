"""Monomial ideal combinatorics: membership, colons, saturation,
intersection, standard pairs, localization and torsion counting.

Everything here is exact integer bookkeeping on exponent vectors.  An
ideal is held by its unique minimal generating set (an antichain under
divisibility), so structural equality is ideal equality.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .cycles import MonomialPrime
from .errors import ParseError


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial stored as its exponent vector."""

    exps: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(a) for a in self.exps)
        if any(a < 0 for a in e):
            raise ValueError(f"negative exponent in {e!r}")
        object.__setattr__(self, "exps", e)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "Monomial":
        return cls(tuple(power if j == i else 0 for j in range(n)))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.exps) if a)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def pow(self, k: int) -> "Monomial":
        return Monomial(tuple(a * k for a in self.exps))

    def colon_by(self, other: "Monomial") -> "Monomial":
        """The generator self : other, i.e. max(self - other, 0) exponentwise."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def zeroed(self, i: int) -> "Monomial":
        return Monomial(tuple(0 if j == i else a for j, a in enumerate(self.exps)))

    def restricted(self, keep: Sequence[int]) -> "Monomial":
        """Project onto the listed variable positions (in the given order)."""
        return Monomial(tuple(self.exps[i] for i in keep))

    def to_text(self, names: Sequence[str]) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, a in enumerate(self.exps):
            if a == 1:
                parts.append(names[i])
            elif a > 1:
                parts.append(f"{names[i]}^{a}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self.exps!r})"


def _minimalize(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generating set: drop every monomial a proper divisor also generates."""
    unique = sorted(set(monomials), key=lambda m: (m.degree, m.exps))
    kept: list[Monomial] = []
    for m in unique:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generators, sorted canonically.

    The zero ideal has no generators; the unit ideal is generated by 1.
    """

    n: int
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise ValueError(f"generator {g!r} does not live in {self.n} variables")
        object.__setattr__(self, "gens", _minimalize(self.gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.one(n),))

    @classmethod
    def of(cls, n: int, gens: Iterable[Sequence[int] | Monomial]) -> "MonomialIdeal":
        ms = tuple(g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in gens)
        return cls(n, ms)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.n}, {[g.exps for g in self.gens]})"


def member(m: Monomial, ideal: MonomialIdeal) -> bool:
    """Monomial membership: some generator divides m."""
    return any(g.divides(m) for g in ideal.gens)


def contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """Ideal containment small <= big, checked generatorwise."""
    return all(member(g, big) for g in small.gens)


def colon_mono(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The colon ideal (ideal : m)."""
    return MonomialIdeal(ideal.n, tuple(g.colon_by(m) for g in ideal.gens))


def colon_ideal(ideal: MonomialIdeal, by: MonomialIdeal) -> MonomialIdeal:
    """The colon (ideal : by), the intersection of the generator colons."""
    if by.is_zero:
        raise ValueError(
            "colon by the zero ideal is the unit ideal by convention; "
            "refusing to produce it silently"
        )
    return reduce(intersect, (colon_mono(ideal, g) for g in by.gens))


def saturate_mono(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The saturation (ideal : m^infinity), computed by iterated colon."""
    cur = ideal
    while True:
        nxt = colon_mono(cur, m)
        if nxt == cur:
            return cur
        cur = nxt


def saturate(ideal: MonomialIdeal, by: MonomialIdeal) -> MonomialIdeal:
    """The saturation (ideal : by^infinity), computed by iterated colon."""
    cur = ideal
    while True:
        nxt = colon_ideal(cur, by)
        if nxt == cur:
            return cur
        cur = nxt


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm of generators."""
    if a.n != b.n:
        raise ValueError(f"ambient mismatch: {a.n} vs {b.n}")
    return MonomialIdeal(a.n, tuple(g.lcm(h) for g in a.gens for h in b.gens))


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The sum ideal, generated by both generator sets."""
    if a.n != b.n:
        raise ValueError(f"ambient mismatch: {a.n} vs {b.n}")
    return MonomialIdeal(a.n, a.gens + b.gens)


def multiply(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The product m * ideal."""
    return MonomialIdeal(ideal.n, tuple(g * m for g in ideal.gens))


def ideal_of_prime(p: MonomialPrime) -> MonomialIdeal:
    """The monomial ideal generated by the prime's variables."""
    return MonomialIdeal(p.n, tuple(Monomial.var(p.n, i) for i in p.gens))


def variable_ideal(n: int) -> MonomialIdeal:
    """The ideal generated by all variables (the fine maximal ideal)."""
    return MonomialIdeal(n, tuple(Monomial.var(n, i) for i in range(n)))


# ----------------------------------------------------------------------
# standard pairs
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class StandardPair:
    """A head monomial together with its set of free variables.

    The pair stands for all products of the head with monomials in the
    free variables; the heads never touch their free variables.
    """

    head: Monomial
    free: frozenset[int]

    @property
    def key(self) -> tuple:
        return (tuple(sorted(self.free)), self.head.exps)


def _var_product(n: int, indices: Iterable[int]) -> Monomial:
    return Monomial(tuple(1 if i in set(indices) else 0 for i in range(n)))


def standard_pairs(ideal: MonomialIdeal) -> frozenset[StandardPair]:
    """The standard pairs of the complement of a monomial ideal.

    A pair (head, free) is admissible when the head avoids its free
    variables and no free-variable multiple of the head lies in the
    ideal; the standard pairs are the maximal admissible pairs.  They
    are found free-set by free-set: saturating at a candidate free set
    bounds the possible heads to a finite box, and maximality is a
    one-variable-enlargement test against neighbouring saturations.
    """
    n = ideal.n
    if ideal.is_unit:
        return frozenset()
    sats: dict[frozenset[int], MonomialIdeal] = {}

    def sat(free: frozenset[int]) -> MonomialIdeal:
        if free not in sats:
            sats[free] = saturate_mono(ideal, _var_product(n, free))
        return sats[free]

    pairs = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            free = frozenset(combo)
            here = sat(free)
            if here.is_unit:
                continue
            rest = [i for i in range(n) if i not in free]
            caps = {}
            for j in rest:
                d = max((g.exps[j] for g in here.gens), default=0)
                caps[j] = d
            if any(caps[j] == 0 for j in rest):
                # a variable untouched by the saturation enlarges every
                # admissible pair, so no pair is maximal at this free set
                continue
            for choice in itertools.product(*(range(caps[j]) for j in rest)):
                exps = [0] * n
                for j, a in zip(rest, choice):
                    exps[j] = a
                head = Monomial(tuple(exps))
                if member(head, here):
                    continue
                if all(member(head.zeroed(j), sat(free | {j})) for j in rest):
                    pairs.append(StandardPair(head, free))
    return frozenset(pairs)


# ----------------------------------------------------------------------
# localization and torsion length of a subquotient presentation
# ----------------------------------------------------------------------


def localize_pair(
    numerator: MonomialIdeal, denominator: MonomialIdeal, keep: Sequence[int]
) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Invert the variables outside ``keep`` in both ideals.

    Inverted variables become units, so their exponents are dropped and
    the generators re-minimalized over the kept variables.
    """
    keep = tuple(sorted(keep))
    nn = len(keep)
    num = MonomialIdeal(nn, tuple(g.restricted(keep) for g in numerator.gens))
    den = MonomialIdeal(nn, tuple(g.restricted(keep) for g in denominator.gens))
    return num, den


def h0_count(numerator: MonomialIdeal, denominator: MonomialIdeal) -> int:
    """Number of monomials of numerator/denominator killed by a power of
    every variable: the classical length of the torsion at the fine
    maximal ideal.

    Every such monomial has, in each variable, an exponent strictly
    below the largest exponent of that variable among the denominator's
    generators, so a finite box search is exact.
    """
    n = numerator.n
    if numerator == denominator:
        return 0
    if n == 0:
        # the ring is the ground field; the module is it or nothing
        return 1
    sat = saturate(denominator, variable_ideal(n))
    caps = [max((g.exps[j] for g in denominator.gens), default=0) for j in range(n)]
    count = 0
    for exps in itertools.product(*(range(max(c, 1)) for c in caps)):
        m = Monomial(exps)
        if member(m, sat) and not member(m, denominator) and member(m, numerator):
            count += 1
    return count


# ----------------------------------------------------------------------
# text and JSON forms
# ----------------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """Parse ``x^2*y`` style text against a list of variable names."""
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    s = text.strip()
    if s == "1":
        return Monomial(tuple(exps))
    pos = 0
    for chunk in s.split("*"):
        factor = chunk.strip()
        m = re.match(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$", factor)
        if not m:
            raise ParseError(f"bad monomial factor {factor!r}", text, pos)
        name, power = m.group(1), int(m.group(2) or 1)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", text, pos)
        exps[index[name]] += power
        pos += len(chunk) + 1
    return Monomial(tuple(exps))


def parse_ideal(text: str, names: Sequence[str]) -> MonomialIdeal:
    """Parse a comma-separated generator list; empty text or 0 is the zero ideal."""
    n = len(names)
    s = text.strip()
    if not s or s == "0":
        return MonomialIdeal.zero(n)
    gens = [parse_monomial(chunk, names) for chunk in s.split(",")]
    return MonomialIdeal(n, tuple(gens))


def format_ideal(ideal: MonomialIdeal, names: Sequence[str]) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(g.to_text(names) for g in ideal.gens)


def ideal_to_json(ideal: MonomialIdeal, names: Sequence[str]) -> dict:
    return {"vars": list(names), "gens": [list(g.exps) for g in ideal.gens]}


def ideal_from_json(data: dict) -> tuple[MonomialIdeal, tuple[str, ...]]:
    names = tuple(data["vars"])
    return MonomialIdeal.of(len(names), [tuple(g) for g in data["gens"]]), names

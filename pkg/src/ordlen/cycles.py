"""Cycles supported on monomial primes, and their ordinal shadow.

A monomial prime in n variables is the prime ideal generated by a
subset of the variables, recorded by index.  A cycle is a formal sum of
such primes with natural coefficients; ``binord`` collapses a cycle to
the ordinal whose w^d coefficient is the total mass in dimension d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .ordinal import Ordinal


@dataclass(frozen=True, slots=True)
class MonomialPrime:
    """The prime generated by the variables ``gens`` inside n variables."""

    n: int
    gens: frozenset[int]

    def __post_init__(self):
        gens = frozenset(int(i) for i in self.gens)
        if self.n < 0:
            raise ValueError("ambient variable count must be a natural number")
        if any(i < 0 or i >= self.n for i in gens):
            raise ValueError(f"variable index out of range in {sorted(gens)} (n={self.n})")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "MonomialPrime":
        return cls(n, frozenset(indices))

    @property
    def dim(self) -> int:
        """Dimension of the quotient by this prime: n minus the generator count."""
        return self.n - len(self.gens)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.gens))

    def contains(self, other: "MonomialPrime") -> bool:
        """Ideal containment: self >= other as primes."""
        return other.gens <= self.gens

    def to_text(self, names: Sequence[str]) -> str:
        if not self.gens:
            return "[0]"
        return "[" + ",".join(names[i] for i in self.key) + "]"

    def __repr__(self) -> str:
        return f"MonomialPrime({self.n}, {set(self.key) if self.gens else '{}'})"


@dataclass(frozen=True, slots=True)
class Cycle:
    """A formal natural-number combination of monomial primes."""

    n: int
    terms: tuple[tuple[MonomialPrime, int], ...] = ()

    def __post_init__(self):
        acc: dict[MonomialPrime, int] = {}
        for p, c in self.terms:
            if p.n != self.n:
                raise ValueError(f"prime ambient {p.n} != cycle ambient {self.n}")
            if c < 0:
                raise ValueError("cycle coefficients must be natural numbers")
            acc[p] = acc.get(p, 0) + c
        terms = tuple(sorted(((p, c) for p, c in acc.items() if c), key=lambda t: t[0].key))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls, n: int) -> "Cycle":
        return cls(n, ())

    @classmethod
    def of(cls, n: int, terms: Mapping[MonomialPrime, int]) -> "Cycle":
        return cls(n, tuple(terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> tuple[MonomialPrime, ...]:
        return tuple(p for p, _ in self.terms)

    def coeff(self, p: MonomialPrime) -> int:
        for q, c in self.terms:
            if q == p:
                return c
        return 0

    @property
    def is_binary(self) -> bool:
        return all(c <= 1 for _, c in self.terms)

    @property
    def is_effective(self) -> bool:
        """Always true: coefficients are naturals by construction."""
        return True

    @property
    def valence(self) -> int:
        return sum(c for _, c in self.terms)

    def __add__(self, other: "Cycle") -> "Cycle":
        if not isinstance(other, Cycle):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"cannot add cycles with ambients {self.n} and {other.n}")
        return Cycle(self.n, self.terms + other.terms)

    def weaker(self, other: "Cycle") -> bool:
        """Termwise coefficient comparison."""
        if other.n != self.n:
            raise ValueError(f"cannot compare cycles with ambients {self.n} and {other.n}")
        return all(c <= other.coeff(p) for p, c in self.terms)

    def to_text(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{p.to_text(names)}" for p, c in self.terms)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"prime": list(p.key), "coeff": c} for p, c in self.terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cycle":
        n = int(data["n"])
        terms = tuple(
            (MonomialPrime.of(n, t["prime"]), int(t["coeff"])) for t in data["terms"]
        )
        return cls(n, terms)


def binord(cycle: Cycle) -> Ordinal:
    """The ordinal with w^d coefficient equal to the cycle's mass in dimension d."""
    return Ordinal.from_pairs((p.dim, c) for p, c in cycle.terms)


def binary_cycle(n: int, primes: Iterable[MonomialPrime]) -> Cycle:
    """The cycle putting coefficient one on each prime of the given set."""
    return Cycle(n, tuple((p, 1) for p in set(primes)))

"""Brute-force oracle: finite-length modules over the two-element field.

An Artinian monomial quotient becomes an explicit finite-dimensional
module: the standard monomials are a basis and each variable acts by a
nilpotent multiplication table.  Vectors are bitmasks, subspaces are
reduced echelon bases, and everything is enumerated or solved by
Gaussian elimination, giving an implementation-independent check of the
length theory at finite length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GuardError
from .monomial import Monomial, MonomialIdeal, member

SUBMODULE_DIM_CAP = 8
ENDO_DIM_CAP = 5


# ----------------------------------------------------------------------
# bitmask linear algebra over the two-element field
# ----------------------------------------------------------------------


def echelon(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced echelon basis of the span; canonical per subspace."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    # clear every pivot from the rows above it, bottom row first
    for i in range(len(basis) - 1, -1, -1):
        for j in range(i + 1, len(basis)):
            if basis[i] ^ basis[j] < basis[i]:
                basis[i] ^= basis[j]
    return tuple(basis)


def reduce_mod(basis: Sequence[int], v: int) -> int:
    """Canonical representative of v modulo the span of an echelon basis."""
    for b in basis:
        v = min(v, v ^ b)
    return v


def in_span(basis: Sequence[int], v: int) -> bool:
    return reduce_mod(basis, v) == 0


def span_vectors(basis: Sequence[int]) -> list[int]:
    vs = [0]
    for b in basis:
        vs += [v ^ b for v in vs]
    return vs


def kernel_of_map(images: Sequence[int]) -> tuple[int, ...]:
    """Kernel basis of the linear map sending basis vector i to images[i].

    Kernel elements are combination masks over the domain basis.
    """
    pivots: list[tuple[int, int]] = []
    kernel = []
    for i, img in enumerate(images):
        track = 1 << i
        for p_img, p_track in pivots:
            if img ^ p_img < img:
                img ^= p_img
                track ^= p_track
        if img:
            pivots.append((img, track))
            pivots.sort(key=lambda t: t[0], reverse=True)
        else:
            kernel.append(track)
    return echelon(kernel)


def solve_homogeneous(equations: Sequence[int], nbits: int) -> tuple[int, ...]:
    """Solution-space basis of a homogeneous system over the two-element
    field, each equation a bitmask functional over nbits unknowns."""
    rows: list[int] = []
    for eq in equations:
        for r in rows:
            if eq ^ r < eq:
                eq ^= r
        if eq:
            rows.append(eq)
            rows.sort(reverse=True)
    # reduced form: each row keeps its pivot bit and free bits only
    for i in range(len(rows) - 1, -1, -1):
        for j in range(i + 1, len(rows)):
            if rows[i] ^ rows[j] < rows[i]:
                rows[i] ^= rows[j]
    pivot_bits = {r.bit_length() - 1 for r in rows}
    basis = []
    for fb in range(nbits):
        if fb in pivot_bits:
            continue
        sol = 1 << fb
        for r in rows:
            if (r >> fb) & 1:
                sol |= 1 << (r.bit_length() - 1)
        basis.append(sol)
    return echelon(basis)


def intersect_spans(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Intersection of two subspaces; fine at oracle scale."""
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    return echelon(v for v in span_vectors(small) if v and in_span(big, v))


def _apply(table: Sequence[int], v: int) -> int:
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= table[i]
        v >>= 1
        i += 1
    return out


def _concat(parts: Sequence[int], width: int) -> int:
    out = 0
    for k, p in enumerate(parts):
        out |= p << (k * width)
    return out


# ----------------------------------------------------------------------
# the oracle module
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteModule:
    """A module over the two-element field with commuting nilpotent
    variable actions, given by the images of each basis vector."""

    nvars: int
    dim: int
    actions: tuple[tuple[int, ...], ...]
    labels: tuple[Monomial, ...] = ()

    def __post_init__(self):
        for table in self.actions:
            if len(table) != self.dim:
                raise ValueError("action table size does not match dimension")

    @classmethod
    def from_quotient(cls, denominator: MonomialIdeal) -> "FiniteModule":
        """The quotient by an Artinian monomial ideal, on its standard
        monomial basis (sorted by degree)."""
        n = denominator.n
        caps = []
        for j in range(n):
            pure = [g.exps[j] for g in denominator.gens if g.support in ((j,), ())]
            if not pure:
                raise ValueError(
                    f"not Artinian: no pure power of variable {j} among the generators"
                )
            caps.append(min(pure))
        basis = [
            Monomial(e)
            for e in itertools.product(*(range(c) for c in caps))
            if not member(Monomial(e), denominator)
        ]
        basis.sort(key=lambda m: (m.degree, m.exps))
        index = {m: i for i, m in enumerate(basis)}
        actions = []
        for j in range(n):
            xj = Monomial.var(n, j)
            table = []
            for m in basis:
                image = m * xj
                table.append(0 if member(image, denominator) else 1 << index[image])
            actions.append(tuple(table))
        mod = cls(n, len(basis), tuple(actions), tuple(basis))
        for j in range(n):
            if not mod._action_is_nilpotent(j):
                raise ValueError(f"variable {j} does not act nilpotently")
        return mod

    def _action_is_nilpotent(self, j: int) -> bool:
        table = self.actions[j]
        power = list(table)
        for _ in range(self.dim):
            power = [_apply(table, v) for v in power]
        return all(v == 0 for v in power)

    def apply_var(self, j: int, v: int) -> int:
        return _apply(self.actions[j], v)

    def is_submodule(self, basis: Sequence[int]) -> bool:
        return all(
            in_span(basis, self.apply_var(j, b))
            for j in range(self.nvars)
            for b in basis
        )

    def socle(self) -> tuple[int, ...]:
        """Everything killed by every variable."""
        if self.dim == 0:
            return ()
        images = [
            _concat([self.actions[j][i] for j in range(self.nvars)], self.dim)
            for i in range(self.dim)
        ]
        return kernel_of_map(images)


def closure(module: FiniteModule, vectors: Iterable[int]) -> tuple[int, ...]:
    """Echelon basis of the smallest action-stable subspace containing
    the given vectors."""
    basis = list(echelon(vectors))
    queue = list(basis)
    while queue:
        v = queue.pop()
        for j in range(module.nvars):
            w = reduce_mod(basis, module.apply_var(j, v))
            if w:
                basis = list(echelon(basis + [w]))
                queue.append(w)
    return echelon(basis)


def enumerate_submodules(
    module: FiniteModule, dim_cap: int = SUBMODULE_DIM_CAP
) -> list[tuple[int, ...]]:
    """All action-stable subspaces, as echelon bases, zero and the whole
    module included."""
    if module.dim > dim_cap:
        raise GuardError(
            f"submodule enumeration at dimension {module.dim} exceeds the guard ({dim_cap})"
        )
    all_vectors = range(1, 1 << module.dim)
    seen: dict[tuple[int, ...], tuple[int, ...]] = {(): ()}
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        base = frontier.pop()
        for v in all_vectors:
            if in_span(base, v):
                continue
            grown = closure(module, list(base) + [v])
            if grown not in seen:
                seen[grown] = grown
                frontier.append(grown)
    return sorted(seen.values(), key=lambda b: (len(b), b))


def longest_chain(module: FiniteModule) -> int:
    """Number of steps in the longest strictly increasing chain of
    submodules from zero to the whole module.

    Every step of any chain raises the dimension, so no chain beats one
    that climbs a dimension at a time; such a chain always exists here
    because nilpotent actions leave a socle in every quotient, and it
    is built and verified stepwise below.  The count equals the
    dimension.
    """
    basis: list[int] = []
    steps = 0
    while len(basis) < module.dim:
        images = [
            _concat(
                [reduce_mod(basis, module.apply_var(j, 1 << i)) for j in range(module.nvars)],
                module.dim,
            )
            for i in range(module.dim)
        ]
        candidates = [
            v for v in span_vectors(kernel_of_map(images)) if not in_span(basis, v)
        ]
        if not candidates:
            raise RuntimeError("socle ascent stalled; the actions are not nilpotent")
        v = min(candidates)
        if any(not in_span(basis, module.apply_var(j, v)) for j in range(module.nvars)):
            raise RuntimeError("socle candidate fails the submodule check")
        basis = list(echelon(basis + [v]))
        steps += 1
    return steps


def enumerate_endos(
    module: FiniteModule, dim_cap: int = ENDO_DIM_CAP
) -> list[tuple[int, ...]]:
    """All linear maps commuting with every variable action, as image tables."""
    d = module.dim
    if d > dim_cap:
        raise GuardError(
            f"endomorphism enumeration at dimension {d} exceeds the guard ({dim_cap})"
        )
    if d == 0:
        return [()]
    # unknown bits: z[i*d + o] = bit o of the image of basis vector i
    equations = []
    for act in module.actions:
        for i in range(d):
            for o in range(d):
                eq = 0
                w = act[i]
                b = 0
                while w:  # bit o of X(A e_i)
                    if w & 1:
                        eq ^= 1 << (b * d + o)
                    w >>= 1
                    b += 1
                for c in range(d):  # bit o of A(X e_i)
                    if (act[c] >> o) & 1:
                        eq ^= 1 << (i * d + c)
                if eq:
                    equations.append(eq)
    endos = set()
    for combo in span_vectors(solve_homogeneous(equations, d * d)):
        endos.add(tuple((combo >> (i * d)) & ((1 << d) - 1) for i in range(d)))
    return sorted(endos)


def endo_power(module: FiniteModule, table: Sequence[int], k: int) -> tuple[int, ...]:
    out = tuple(1 << i for i in range(module.dim))
    for _ in range(k):
        out = tuple(_apply(table, v) for v in out)
    return out


def endo_kernel(table: Sequence[int]) -> tuple[int, ...]:
    return kernel_of_map(table)


def endo_image(table: Sequence[int]) -> tuple[int, ...]:
    return echelon(table)

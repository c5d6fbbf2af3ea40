"""The twelve acceptance gates, one test per criterion.

Under ``pytest -v`` each criterion contributes exactly one PASSED or
FAILED line.  Criteria with a stated time budget assert it; the rest
are exact-value or property sweeps over the fixed corpora.
"""

import itertools
import time

import numpy as np

from ordlen.checks import (
    dimfil_checks,
    latt_checks,
    maxassopen_checks,
    multendo_checks,
    ordinal_checks,
    primmin_checks,
    semiadd_checks,
    submod_checks,
)
from ordlen.corpus import artinian_ideals_containing_power
from ordlen.cycles import Cycle, MonomialPrime
from ordlen.endo_fixture import check_endo_fixture
from ordlen.finite_oracle import FiniteModule, longest_chain
from ordlen.modules import (
    MonomialModule,
    ass_poset_length,
    fcyc,
    is_binary_module,
    length,
)
from ordlen.monomial import ideal_of_prime, parse_ideal
from ordlen.ordinal import OMEGA, ONE, Ordinal

NAMES = ("x", "y")


def I2(text):
    return parse_ideal(text, NAMES)


def assert_all_pass(results):
    bad = [r.line() for r in results if not r.passed]
    assert not bad, "\n".join(bad)


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            elapsed = time.perf_counter() - self.start
            assert elapsed < self.seconds, (
                f"took {elapsed:.2f}s, budget {self.seconds}s"
            )


def test_c01_worked_example_exactness():
    with Budget(1.0):
        R_mod = MonomialModule.quotient_ring(I2("x^2, x*y"))
        assert length(R_mod) == Ordinal.parse("w + 1")
        assert length(MonomialModule(2, I2("y, x^2"), I2("x^2, x*y"))) == OMEGA
        assert length(MonomialModule(2, I2("x, y"), I2("x^2, x*y"))) == Ordinal.parse(
            "w + 1"
        )
        cycle = fcyc(R_mod)
        assert cycle == Cycle.of(
            2, {MonomialPrime.of(2, (0,)): 1, MonomialPrime.of(2, (0, 1)): 1}
        )
        assert cycle.is_binary and is_binary_module(R_mod)


def test_c02_domain_lengths():
    with Budget(1.0):
        for n in (1, 2, 3):
            assert length(MonomialModule.full_ring(n)) == Ordinal.omega_power(n)
            for size in range(n + 1):
                for combo in itertools.combinations(range(n), size):
                    P = MonomialPrime.of(n, combo)
                    quotient = MonomialModule.quotient_ring(ideal_of_prime(P))
                    assert length(quotient) == Ordinal.omega_power(P.dim)


def test_c03_oracle_agreement_at_finite_length():
    with Budget(60.0):
        ideals = artinian_ideals_containing_power(2, 4)
        assert len(ideals) > 1
        for J in ideals:
            M = FiniteModule.from_quotient(J)
            mu = length(MonomialModule.quotient_ring(J))
            assert mu.is_finite
            assert longest_chain(M) == M.dim == mu.coeff(0)


def test_c04_semi_additivity_sweep():
    with Budget(120.0):
        results = semiadd_checks(max_vars=3, max_deg=3, sample=500, seed=0)
        assert {r.name for r in results} == {
            "semiadd-lower-2var",
            "semiadd-upper-2var",
            "semiadd-lower-3var",
            "semiadd-upper-3var",
        }
        assert_all_pass(results)


def test_c05_submodule_monotonicity_sweep():
    results = submod_checks(max_vars=3, max_deg=3, sample=500, seed=0)
    assert "submod-monotone-2var" in {r.name for r in results}
    assert_all_pass(results)


def test_c06_lattice_law_and_strict_join():
    results = latt_checks(max_deg=3)
    assert "latt-join-strict" in {r.name for r in results}
    assert_all_pass(results)
    # the documented equality instance on R/(x^2, x*y)
    M = MonomialModule.quotient_ring(I2("x^2, x*y"))
    len_y = length(M.submodule(I2("y, x^2")))
    len_x = length(M.submodule(I2("x")))
    joined = length(M.submodule(I2("x, y")))
    assert len_y.join(len_x) == joined == Ordinal.parse("w + 1")


def test_c07_dimension_filtration():
    assert_all_pass(dimfil_checks(max_vars=3, max_deg=3, sample=500, seed=0))


def test_c08_prim_kernel_identity():
    assert_all_pass(primmin_checks(max_vars=3, max_deg=3, sample=500, seed=0))


def test_c09_maximal_embedded_prime_is_open():
    assert_all_pass(maxassopen_checks(max_deg=3))


def test_c10_multiplication_endomorphism_laws():
    assert_all_pass(multendo_checks(max_deg=3))


def test_c11_endomorphism_fixture_suite():
    with Budget(30.0):
        assert_all_pass(check_endo_fixture(order=8, lo=-2, hi=2, seed=0, samples=200))
    # nilpotents square to zero: the exponent matches the longest chain
    # of associated primes of the underlying module
    assert ass_poset_length(MonomialModule.quotient_ring(I2("x^2, x*y"))) == 2


def test_c12_ordinal_algebra_exhaustive():
    with Budget(10.0):
        assert_all_pass(ordinal_checks(max_deg=3, max_coeff=3))

        # associativity over every triple from the full pool, for both
        # sums, by interning each pairwise result and comparing the
        # composed index tables
        pool = [Ordinal(c) for c in itertools.product(range(4), repeat=4)]
        for op in (Ordinal.__add__, Ordinal.shuffle_sum):
            mid_index = {}
            pair = [[0] * len(pool) for _ in pool]
            for i, a in enumerate(pool):
                for j, b in enumerate(pool):
                    s = op(a, b)
                    pair[i][j] = mid_index.setdefault(s, len(mid_index))
            mids = sorted(mid_index, key=mid_index.get)
            final_index = {}
            left = [[0] * len(pool) for _ in mids]
            right = [[0] * len(mids) for _ in pool]
            for m, s in enumerate(mids):
                for k, c in enumerate(pool):
                    left[m][k] = final_index.setdefault(op(s, c), len(final_index))
            for i, a in enumerate(pool):
                for m, s in enumerate(mids):
                    right[i][m] = final_index.setdefault(op(a, s), len(final_index))
            pair_t = np.array(pair, dtype=np.int32)
            left_t = np.array(left, dtype=np.int32)
            right_t = np.array(right, dtype=np.int32)
            assert (left_t[pair_t, :] == right_t[:, pair_t]).all()

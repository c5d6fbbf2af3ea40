"""Named check suites sweeping the length theory over ideal corpora.

Each suite returns a list of CheckResult records; a failing record
carries a witness (the offending module or pair) in its detail and
evidence.  Suites are deterministic given (bounds, seed).
"""

from __future__ import annotations

import itertools
import random

from .corpus import (
    all_ideals,
    contained_pairs,
    monomials_of_degree_at_most,
    random_contained_pairs,
    artinian_ideals_containing_power,
    random_ideal,
    sandwich_numerators,
)
from .endo_fixture import check_endo_fixture
from .finite_oracle import (
    FiniteModule,
    endo_image,
    endo_kernel,
    endo_power,
    enumerate_endos,
    enumerate_submodules,
    in_span,
    intersect_spans,
    longest_chain,
    span_vectors,
)
from .modules import (
    MonomialModule,
    ass,
    dim_filtration,
    find_submodule_with_length,
    is_binary_module,
    is_open_submodule,
    length,
    mult_endo,
    open_via_witnesses,
    prim_kernel,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    colon_mono,
    contains,
    format_ideal,
    default_names,
    ideal_of_prime,
    ideal_sum,
    intersect,
    parse_ideal,
)
from .ordinal import Ordinal
from .reporting import CheckResult

DEFAULT_SAMPLE = 500


def _witness_pair(J: MonomialIdeal, I: MonomialIdeal) -> str:
    names = default_names(J.n)
    return f"J=({format_ideal(J, names)}), I=({format_ideal(I, names)})"


def _result(name: str, failures: list, detail_pass: str) -> CheckResult:
    if not failures:
        return CheckResult(name, True, detail_pass)
    return CheckResult(
        name,
        False,
        f"{len(failures)} failures; first: {failures[0]}",
        {"witnesses": [str(w) for w in failures[:5]]},
    )


# ----------------------------------------------------------------------
# ordinal algebra
# ----------------------------------------------------------------------


def _ordinals_up_to(max_deg: int, max_coeff: int) -> list[Ordinal]:
    return [
        Ordinal(c)
        for c in itertools.product(*(range(max_coeff + 1) for _ in range(max_deg + 1)))
    ]


def ordinal_checks(max_deg: int = 3, max_coeff: int = 3, **_) -> list[CheckResult]:
    results = []
    pool = _ordinals_up_to(max_deg, max_coeff)

    bad = []
    for a, b in itertools.product(pool, repeat=2):
        if a.weaker(b) and not a <= b:
            bad.append((a, b))
        diff = b.shuffle_difference(a)
        if a.weaker(b) != (diff is not None):
            bad.append((a, b))
        elif diff is not None and a.shuffle_sum(diff) != b:
            bad.append((a, b))
        if not (a + b) <= a.shuffle_sum(b):
            bad.append((a, b))
    results.append(
        _result(
            "ordinal-pair-laws",
            bad,
            f"order extension, difference, sum domination on {len(pool)}² pairs",
        )
    )

    bad = []
    for a in pool:
        for e in range(max_deg + 2):
            high, low = a.split(e)
            if high + low != a or high.shuffle_sum(low) != a:
                bad.append((a, e))
    results.append(_result("ordinal-split", bad, "split reconstructs under both sums"))

    small = _ordinals_up_to(2, 2)
    bad = []
    for a, b, c in itertools.product(small, repeat=3):
        if (a + b) + c != a + (b + c):
            bad.append((a, b, c))
        if a.shuffle_sum(b).shuffle_sum(c) != a.shuffle_sum(b.shuffle_sum(c)):
            bad.append((a, b, c))
    results.append(
        _result("ordinal-assoc", bad, f"both sums associative on {len(small)}³ triples")
    )
    return results


# ----------------------------------------------------------------------
# semi-additivity
# ----------------------------------------------------------------------


def _semiadd_sweep(pairs, tag: str) -> list[CheckResult]:
    low_bad, high_bad = [], []
    for J, I in pairs:
        mu = length(MonomialModule.quotient_ring(J))
        sub = length(MonomialModule(J.n, I, J))
        quo = length(MonomialModule.quotient_ring(I))
        if not (quo + sub) <= mu:
            low_bad.append(_witness_pair(J, I))
        if not mu <= quo.shuffle_sum(sub):
            high_bad.append(_witness_pair(J, I))
    return [
        _result(f"semiadd-lower-{tag}", low_bad, f"{len(pairs)} exact sequences"),
        _result(f"semiadd-upper-{tag}", high_bad, f"{len(pairs)} exact sequences"),
    ]


def semiadd_checks(
    max_vars: int = 3,
    max_deg: int = 3,
    seed: int = 0,
    sample: int = DEFAULT_SAMPLE,
    **_,
) -> list[CheckResult]:
    results = _semiadd_sweep(contained_pairs(all_ideals(2, max_deg)), "2var")
    if max_vars >= 3:
        results += _semiadd_sweep(random_contained_pairs(3, sample, seed), "3var")
    return results


# ----------------------------------------------------------------------
# submodule monotonicity
# ----------------------------------------------------------------------


def _monotone_sweep(pairs, max_deg: int, tag: str) -> CheckResult:
    bad = []
    count = 0
    for J, I in pairs:
        M = MonomialModule(J.n, I, J)
        mu = length(M)
        for A in sandwich_numerators(J, I, max_deg, 2):
            count += 1
            if not length(M.submodule(A)).weaker(mu):
                bad.append(_witness_pair(J, A))
    return _result(f"submod-monotone-{tag}", bad, f"{count} sandwiched submodules")


def submod_checks(
    max_vars: int = 3,
    max_deg: int = 3,
    seed: int = 0,
    sample: int = DEFAULT_SAMPLE,
    **_,
) -> list[CheckResult]:
    results = [_monotone_sweep(contained_pairs(all_ideals(2, max_deg)), max_deg, "2var")]
    if max_vars >= 3:
        results.append(
            _monotone_sweep(random_contained_pairs(3, sample, seed), max_deg, "3var")
        )

    # Realization of weaker ordinals is existence-only; the search is
    # best-effort and a miss is reported, never treated as a refutation.
    names = ("x", "y")
    probes = [
        parse_ideal(t, names)
        for t in ("x^2, x*y", "x*y", "x^2, x*y, y^3", "x")
    ]
    found = missing = 0
    bad = []
    for J in probes:
        M = MonomialModule.quotient_ring(J)
        mu = length(M)
        targets = {
            Ordinal(c)
            for c in itertools.product(*(range(v + 1) for v in mu.coeffs))
        }
        for nu in targets:
            numerator = find_submodule_with_length(M, nu)
            if numerator is None:
                missing += 1
            else:
                found += 1
                if length(M.submodule(numerator)) != nu:
                    bad.append((J, nu))
    return results + [
        _result(
            "submod-converse-search",
            bad,
            f"{found} weaker lengths realized, {missing} not found at bound",
        )
    ]


# ----------------------------------------------------------------------
# lattice laws
# ----------------------------------------------------------------------


def latt_checks(max_deg: int = 3, **_) -> list[CheckResult]:
    pairs = contained_pairs(all_ideals(2, max_deg))
    meet_bad, join_bad = [], []
    strict = None
    meet_count = join_count = 0
    for J, I in pairs:
        M = MonomialModule(J.n, I, J)
        mu = length(M)
        binary_len = mu.is_binary
        family = sandwich_numerators(J, I, max_deg, 2)
        lengths = {A: length(M.submodule(A)) for A in family}
        for A, B in itertools.combinations_with_replacement(family, 2):
            la, lb = lengths[A], lengths[B]
            if binary_len:
                meet_count += 1
                if length(M.submodule(intersect(A, B))) != la.meet(lb):
                    meet_bad.append((_witness_pair(J, I), A, B))
            join_count += 1
            joined = length(M.submodule(ideal_sum(A, B)))
            if not la.join(lb).weaker(joined):
                join_bad.append((_witness_pair(J, I), A, B))
            elif strict is None and la.join(lb) != joined:
                names = default_names(J.n)
                strict = (
                    f"J=({format_ideal(J, names)}), N=({format_ideal(A, names)}), "
                    f"N'=({format_ideal(B, names)}): {la} v {lb} = {la.join(lb)} "
                    f"< {joined}"
                )
    results = [
        _result("latt-meet", meet_bad, f"{meet_count} pairs in binary-length modules"),
        _result("latt-join-weaker", join_bad, f"{join_count} pairs"),
    ]
    if strict is None:
        results.append(
            CheckResult("latt-join-strict", False, "no strictly-weaker join found")
        )
    else:
        results.append(CheckResult("latt-join-strict", True, strict))
    return results


# ----------------------------------------------------------------------
# dimension filtration
# ----------------------------------------------------------------------


def _binary_modules(pairs) -> list[MonomialModule]:
    out = []
    for J, I in pairs:
        M = MonomialModule(J.n, I, J)
        if not M.is_zero and is_binary_module(M):
            out.append(M)
    return out


def dimfil_checks(
    max_vars: int = 3,
    max_deg: int = 3,
    seed: int = 0,
    sample: int = DEFAULT_SAMPLE,
    **_,
) -> list[CheckResult]:
    modules = _binary_modules(contained_pairs(all_ideals(2, max_deg)))
    if max_vars >= 3:
        modules += _binary_modules(random_contained_pairs(3, min(sample, 100), seed))
    low_bad, high_bad, step_bad, order_bad = [], [], [], []
    for M in modules:
        mu = length(M)
        previous = None
        least_nonzero = None
        for e in range(M.n + 1):
            D = dim_filtration(M, e)
            high, low = mu.split(e)
            if length(D) != low:
                low_bad.append((M, e))
            if length(M.quotient_by(D.I)) != high:
                high_bad.append((M, e))
            step = (
                length(D)
                if previous is None
                else length(MonomialModule(M.n, D.I, previous.I))
            )
            if step != Ordinal.omega_power(e) * mu.coeff(e):
                step_bad.append((M, e))
            if least_nonzero is None and not D.is_zero:
                least_nonzero = e
            previous = D
        if least_nonzero != mu.order:
            order_bad.append(M)
    n = len(modules)
    return [
        _result("dimfil-low", low_bad, f"length(D_e) = low split over {n} modules"),
        _result("dimfil-high", high_bad, f"length(M/D_e) = high split over {n} modules"),
        _result("dimfil-step", step_bad, f"graded pieces are v_e·w^e over {n} modules"),
        _result("dimfil-order", order_bad, f"first nonzero level is the order, {n} modules"),
    ]


# ----------------------------------------------------------------------
# localization kernels
# ----------------------------------------------------------------------


def primmin_checks(
    max_vars: int = 3,
    max_deg: int = 3,
    seed: int = 0,
    sample: int = DEFAULT_SAMPLE,
    **_,
) -> list[CheckResult]:
    modules = _binary_modules(contained_pairs(all_ideals(2, max_deg)))
    if max_vars >= 3:
        modules += _binary_modules(random_contained_pairs(3, min(sample, 100), seed))
    ass_bad, sum_bad = [], []
    count = 0
    for M in modules:
        primes = ass(M)
        for P in primes:
            count += 1
            K = prim_kernel(M, P)
            quotient = M.quotient_by(K.I)
            expected = {q for q in primes if P.contains(q)}
            if set(ass(quotient)) != expected:
                ass_bad.append((M, P))
            if length(K).shuffle_sum(length(quotient)) != length(M):
                sum_bad.append((M, P))
    return [
        _result("primmin-ass", ass_bad, f"Ass(M/prim) = primes under P, {count} cases"),
        _result("primmin-sum", sum_bad, f"len(prim) ⊕ len(M/prim) = len M, {count} cases"),
    ]


def maxassopen_checks(max_deg: int = 3, **_) -> list[CheckResult]:
    open_bad, agree_bad = [], []
    count = 0
    for J in all_ideals(2, max_deg):
        if J.is_unit:
            continue
        M = MonomialModule.quotient_ring(J)
        if not is_binary_module(M):
            continue
        primes = ass(M)
        embedded = [
            p for p in primes if any(q != p and p.contains(q) for q in primes)
        ]
        for P in embedded:
            if any(q != P and q.contains(P) for q in embedded):
                continue  # not maximal among the embedded primes
            count += 1
            numerator = ideal_sum(ideal_of_prime(P), J)
            if not is_open_submodule(M, numerator):
                open_bad.append((J, P))
            if open_via_witnesses(M, numerator) != is_open_submodule(M, numerator):
                agree_bad.append((J, P))
    return [
        _result("maxassopen-open", open_bad, f"{count} maximal embedded primes open"),
        _result("maxassopen-witness-agree", agree_bad, "witness and length tests agree"),
    ]


# ----------------------------------------------------------------------
# multiplication endomorphisms
# ----------------------------------------------------------------------


def multendo_checks(max_deg: int = 3, **_) -> list[CheckResult]:
    pairs = contained_pairs(all_ideals(2, max_deg))
    multipliers = [m for m in monomials_of_degree_at_most(2, 2) if m.degree >= 1]
    weaker_bad, rk_ineq_bad, open_bad, keropen_bad = [], [], [], []
    binnil_bad, redpow_bad, redrk_bad, unmixed_bad = [], [], [], []
    count = 0
    for J, I in pairs:
        M = MonomialModule(J.n, I, J)
        if M.is_zero:
            continue
        mu = length(M)
        binary = is_binary_module(M)
        unmixed = len({p.dim for p in ass(M)}) == 1
        for r in multipliers:
            count += 1
            a = mult_endo(M, r)
            if not (a.kappa.weaker(mu) and a.theta.weaker(mu)):
                weaker_bad.append((_witness_pair(J, I), r))
            if not ((a.theta + a.kappa) <= mu <= a.theta.shuffle_sum(a.kappa)):
                rk_ineq_bad.append((_witness_pair(J, I), r))
            if a.monic != a.open_image:
                open_bad.append((_witness_pair(J, I), r))
            kernel_open = a.kappa == mu
            if kernel_open and not a.nilpotent:
                keropen_bad.append((_witness_pair(J, I), r))
            if a.reductive_power > mu.valence:
                redpow_bad.append((_witness_pair(J, I), r))
            if binary:
                v = mu.valence
                if a.nilpotent and not kernel_open:
                    keropen_bad.append((_witness_pair(J, I), r))
                if a.nilpotent and not contains(colon_mono(J, r.pow(v)), I):
                    binnil_bad.append((_witness_pair(J, I), r))
            powered = mult_endo(M, r.pow(a.reductive_power))
            if not powered.satisfies_rank_nullity:
                redrk_bad.append((_witness_pair(J, I), r))
            if unmixed and not a.satisfies_rank_nullity:
                unmixed_bad.append((_witness_pair(J, I), r))
    return [
        _result("multendo-weaker", weaker_bad, f"kernel/image weaker, {count} analyses"),
        _result("multendo-rank-nullity-bounds", rk_ineq_bad, "θ+κ ≤ μ ≤ θ⊕κ"),
        _result("multendo-monic-open", open_bad, "monic exactly when image open"),
        _result("multendo-kernel-open-nil", keropen_bad, "kernel open ⟺ nilpotent (binary ⇒)"),
        _result("multendo-binary-nil-power", binnil_bad, "nilpotent ⇒ r^valence kills"),
        _result("multendo-reductive-bound", redpow_bad, "reductive power ≤ valence"),
        _result("multendo-reductive-rank-nullity", redrk_bad, "equality at the reductive power"),
        _result("multendo-unmixed-rank-nullity", unmixed_bad, "unmixed ⇒ equality for all r"),
    ]


# ----------------------------------------------------------------------
# the finite oracle
# ----------------------------------------------------------------------


def _max_ideal_power(n: int, k: int) -> MonomialIdeal:
    gens = [
        Monomial(e)
        for e in itertools.product(*(range(k + 1) for _ in range(n)))
        if sum(e) == k
    ]
    return MonomialIdeal(n, tuple(gens))


def oracle_artinian_checks(
    max_vars: int = 3, seed: int = 0, **_
) -> list[CheckResult]:
    results = []

    bad = []
    ideals = artinian_ideals_containing_power(2, 4)
    for J in ideals:
        fm = FiniteModule.from_quotient(J)
        mu = length(MonomialModule.quotient_ring(J))
        if longest_chain(fm) != fm.dim or mu != Ordinal.finite(fm.dim):
            bad.append(J)
    results.append(
        _result("oracle-chain-2var", bad, f"all {len(ideals)} ideals above the 4th power")
    )

    if max_vars >= 3:
        rng = random.Random(seed)
        bad = []
        for _ in range(10):
            J = ideal_sum(random_ideal(rng, 3, 2), _max_ideal_power(3, 3))
            fm = FiniteModule.from_quotient(J)
            mu = length(MonomialModule.quotient_ring(J))
            if longest_chain(fm) != fm.dim or mu != Ordinal.finite(fm.dim):
                bad.append(J)
        results.append(_result("oracle-chain-3var", bad, "10 sampled Artinian ideals"))

    names = ("x", "y")
    small = [
        parse_ideal(t, names)
        for t in ("x, y", "x^2, x*y, y^2", "x^2, y^2", "x^2, x*y, y^3", "x^3, x*y, y^3")
    ]

    bad = []
    m2 = FiniteModule.from_quotient(small[1])
    if len(enumerate_submodules(m2)) != 6:
        bad.append(small[1])
    for J in small:
        fm = FiniteModule.from_quotient(J)
        dims = {len(b) for b in enumerate_submodules(fm)}
        if dims != set(range(fm.dim + 1)):
            bad.append(J)
    results.append(
        _result("oracle-submodule-realization", bad, "every dimension below len realized")
    )

    bad = []
    for J in small:
        fm = FiniteModule.from_quotient(J)
        if fm.dim > 4:
            continue
        subs = enumerate_submodules(fm)
        for table in enumerate_endos(fm):
            k = 1
            while endo_kernel(endo_power(fm, table, k)) != endo_kernel(
                endo_power(fm, table, k + 1)
            ):
                k += 1
            stable = endo_power(fm, table, k)
            ker, img = endo_kernel(stable), endo_image(stable)
            if intersect_spans(ker, img):
                bad.append((J, table, "reductive power not reductive"))
            if len(ker) + len(img) != fm.dim:
                bad.append((J, table, "rank-nullity"))
            kernel1 = endo_kernel(table)
            essential = all(
                not s or intersect_spans(kernel1, s) for s in subs
            )
            nilpotent = all(v == 0 for v in endo_power(fm, table, fm.dim))
            if essential and not nilpotent:
                bad.append((J, table, "essential kernel not nilpotent"))
    results.append(
        _result("oracle-endo-theorems", bad, "reductive powers, rank-nullity, essential kernels")
    )

    simple = FiniteModule.from_quotient(parse_ideal("x, y", names))
    schur = all(
        table == (1,) or table == (0,) for table in enumerate_endos(simple)
    ) and (1,) in enumerate_endos(simple)
    results.append(
        CheckResult("oracle-schur", schur, "endomorphisms of a simple module are scalars")
    )
    return results


def endo_fixture_checks(truncation: int | None = None, seed: int = 0, **_) -> list[CheckResult]:
    orders = [truncation] if truncation else [4, 8]
    results = []
    for N in orders:
        for r in check_endo_fixture(N, seed=seed):
            results.append(
                CheckResult(f"{r.name}-N{N}", r.passed, r.detail, r.evidence)
            )
    return results


# ----------------------------------------------------------------------
# dispatch
# ----------------------------------------------------------------------

SUITES = {
    "ordinal": ordinal_checks,
    "semiadd": semiadd_checks,
    "submod": submod_checks,
    "latt": latt_checks,
    "dimfil": dimfil_checks,
    "primmin": primmin_checks,
    "maxassopen": maxassopen_checks,
    "multendo": multendo_checks,
    "oracle-artinian": oracle_artinian_checks,
    "endo-fixture": endo_fixture_checks,
}


def run_suites(names: list[str], **options) -> list[CheckResult]:
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown check suite(s): {', '.join(unknown)}")
    results = []
    for name in names:
        results.extend(SUITES[name](**options))
    return results

"""Named invariant checks across the library, used by ``skeinlab verify``.

Each check takes ``nmax`` and returns True/False.  Randomized checks use a
fixed seed so that reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable

from skeinlab import extalg, fdr, fermions, quadring, repsym, skein
from skeinlab.extalg import Fermion, act, contract, inner, wedge
from skeinlab.linalg import rank
from skeinlab.setpart import (
    apply_perm,
    bell,
    catalan,
    enumerate_partitions,
    narayana,
    sign,
    stirling2,
    transposition,
)

SEED = 20240601


@dataclass(frozen=True)
class Check:
    module: str
    name: str
    run: Callable[[int], bool]


def random_fermion(rng: random.Random, n: int, max_degree: int = 4, terms: int = 3) -> Fermion:
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, min(max_degree, 2 * n))
        key = 0
        for p in rng.sample(range(2 * n), deg):
            key |= 1 << p
        out[key] = out.get(key, 0) + rng.choice([-2, -1, 1, 2, 3])
    return Fermion(n, out)


def random_homogeneous(rng: random.Random, n: int, degree: int, terms: int = 3) -> Fermion:
    out = {}
    for _ in range(terms):
        key = 0
        for p in rng.sample(range(2 * n), degree):
            key |= 1 << p
        out[key] = out.get(key, 0) + rng.choice([-1, 1, 2])
    return Fermion(n, out)


def random_subset(rng: random.Random, n: int, nonempty: bool = True) -> set[int]:
    while True:
        s = {x for x in range(1, n + 1) if rng.random() < 0.5}
        if s or not nonempty:
            return s


def random_perm(rng: random.Random, n: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    rng.shuffle(w)
    return tuple(w)


# -- extalg -------------------------------------------------------------------------

def adjointness(nmax: int, samples: int = 200) -> bool:
    rng = random.Random(SEED)
    for _ in range(samples):
        n = rng.randint(1, min(nmax, 5))
        f, g, h = (random_fermion(rng, n) for _ in range(3))
        if inner(wedge(f, g), h) != inner(g, contract(f, h)):
            return False
    return True


def leibniz(nmax: int, samples: int = 200) -> bool:
    rng = random.Random(SEED + 1)
    for _ in range(samples):
        n = rng.randint(1, min(nmax, 5))
        d = rng.randint(0, min(3, 2 * n))
        f = random_homogeneous(rng, n, d)
        g = random_fermion(rng, n)
        p = rng.randrange(2 * n)
        gamma = Fermion(n, {1 << p: 1})
        lhs = contract(gamma, wedge(f, g))
        rhs = wedge(contract(gamma, f), g) + wedge(f, contract(gamma, g)).scale((-1) ** d)
        if lhs != rhs:
            return False
    return True


def contraction_equivariance(nmax: int, samples: int = 100) -> bool:
    rng = random.Random(SEED + 2)
    for _ in range(samples):
        n = rng.randint(1, min(nmax, 5))
        w = random_perm(rng, n)
        g, f = random_fermion(rng, n), random_fermion(rng, n)
        if act(w, contract(g, f)) != contract(act(w, g), act(w, f)):
            return False
    return True


def action_is_group_action(nmax: int, samples: int = 100) -> bool:
    rng = random.Random(SEED + 3)
    for _ in range(samples):
        n = rng.randint(1, min(nmax, 5))
        v, w = random_perm(rng, n), random_perm(rng, n)
        f = random_fermion(rng, n)
        vw = tuple(v[x - 1] for x in w)
        if act(v, act(w, f)) != act(vw, f):
            return False
        g = random_fermion(rng, n)
        if inner(act(w, f), act(w, g)) != inner(f, g):
            return False
    return True


def bidegree_dimensions(nmax: int) -> bool:
    return all(
        len(extalg.monomials_of_bidegree(n, i, j)) == comb(n, i) * comb(n, j)
        for n in range(min(nmax, 6) + 1)
        for i in range(n + 1)
        for j in range(n + 1)
    )


# -- setpart ------------------------------------------------------------------------

def enumeration_counts(nmax: int) -> bool:
    top = max(nmax, 1) + 2
    for n in range(min(top, 8) + 1):
        if len(enumerate_partitions(n)) != bell(n):
            return False
        for k in range(n + 1):
            if len(enumerate_partitions(n, k)) != stirling2(n, k):
                return False
            if len(enumerate_partitions(n, k, noncrossing_only=True)) != narayana(n, k):
                return False
        if len(enumerate_partitions(n, noncrossing_only=True)) != catalan(n):
            return False
    return True


# -- fermions -----------------------------------------------------------------------

def block_operators_commute(nmax: int, samples: int = 200) -> bool:
    rng = random.Random(SEED + 4)
    for _ in range(samples):
        n = rng.randint(1, min(nmax, 5))
        a, b = random_subset(rng, n), random_subset(rng, n)
        f = random_fermion(rng, n)
        if fermions.rho_block(a, fermions.rho_block(b, f)) != fermions.rho_block(b, fermions.rho_block(a, f)):
            return False
    return True


def psi_identities(nmax: int, samples: int = 200) -> bool:
    rng = random.Random(SEED + 5)
    n = min(max(nmax, 2), 5)
    pb, pp = fermions.psi_block, fermions.psi_pair
    for _ in range(samples):
        f = random_fermion(rng, n)
        a, b, c, d = (random_subset(rng, n) for _ in range(4))
        if pb(a, pb(b, f)) != pb(b, pb(a, f)):
            return False
        b2 = set(range(1, n + 1)) - a or {n}
        a2 = a - b2
        if a2 and b2:
            if pp(a2, b2, pb(c, f)) != pb(c, pp(a2, b2, f)):
                return False
            d2 = d - c or {min(d)}
            c2 = c - d2
            if c2 and pp(a2, b2, pp(c2, d2, f)) != pp(c2, d2, pp(a2, b2, f)):
                return False
            if pb(a2 | b2, f) != pb(a2, f) + pp(a2, b2, f) + pb(b2, f):
                return False
    return True


def fermion_equivariance(nmax: int) -> bool:
    n = min(nmax, 4)
    for pi in enumerate_partitions(n):
        for w in extalg.all_permutations(n):
            s = sign(w)
            wp = apply_perm(w, pi)
            if act(w, fermions.F(pi)) != fermions.F(wp).scale(s):
                return False
            if act(w, fermions.f(pi)) != fermions.f(wp).scale(s):
                return False
    return True


def fermion_bidegrees(nmax: int) -> bool:
    for n in range(1, min(nmax, 6) + 1):
        for pi in enumerate_partitions(n):
            k = pi.k
            if fermions.F(pi).bidegrees() != {(n - k, k)}:
                return False
            fb = fermions.f(pi).bidegrees()
            if fb and fb != {(n - k, k - 1)}:
                return False
    return True


def tilde_signs(nmax: int) -> bool:
    for n in range(1, min(nmax, 5) + 1):
        for pi in enumerate_partitions(n):
            if fermions.tildeF(pi) != fermions.F(pi).scale(fermions.tildeF_sign(n, pi.k)):
                return False
            if fermions.tildef(pi) != fermions.f(pi).scale(fermions.tildef_sign(n, pi.k)):
                return False
    return True


def n_removal(nmax: int) -> bool:
    return all(
        fermions.check_n_removal(pi) for n in range(2, min(nmax, 5) + 1) for pi in enumerate_partitions(n)
    )


# -- skein ----------------------------------------------------------------------------

def coxeter_relations(nmax: int) -> bool:
    for n in range(2, min(nmax, 6) + 1):
        basis = [skein.NCVector.basis(pi) for pi in enumerate_partitions(n, noncrossing_only=True)]
        for v in basis:
            for i in range(1, n):
                si_v = skein.skein_si(i, v)
                if skein.skein_si(i, si_v) != v:
                    return False
                for j in range(i + 1, n):
                    sj_v = skein.skein_si(j, v)
                    if j == i + 1:
                        if skein.skein_si(i, skein.skein_si(j, si_v)) != skein.skein_si(j, skein.skein_si(i, sj_v)):
                            return False
                    elif skein.skein_si(i, sj_v) != skein.skein_si(j, si_v):
                        return False
    return True


def skein_relation_theorem(nmax: int) -> bool:
    for n in range(2, min(nmax, 6) + 1):
        for pi in enumerate_partitions(n):
            for i in skein.valid_sigma_indices(pi):
                total = fermions.F(pi)
                for mu, c in skein.sigma(pi, i).items():
                    total = total + fermions.F(mu).scale(c)
                if total:
                    return False
    return True


def sigma_well_defined(nmax: int) -> bool:
    for n in range(2, min(nmax, 6) + 1):
        for pi in enumerate_partitions(n):
            if skein.valid_sigma_indices(pi):
                try:
                    skein.sigma(pi)
                except AssertionError:
                    return False
    return True


def resolution_oracles(nmax: int) -> bool:
    for n in range(min(nmax, 6) + 1):
        for pi in enumerate_partitions(n):
            alg = skein.resolve_algebraic(pi)
            if not alg.is_integral():
                return False
            if alg != skein.resolve_greedy(pi, "lex") or alg != skein.resolve_greedy(pi, "most-tangled"):
                return False
            for mu in alg:
                if mu.k != pi.k or mu.singletons != pi.singletons:
                    return False
    return True


def resolution_equivariance(nmax: int, samples: int = 150) -> bool:
    rng = random.Random(SEED + 6)
    for _ in range(samples):
        n = rng.randint(2, min(max(nmax, 2), 6))
        parts = enumerate_partitions(n)
        pi = parts[rng.randrange(len(parts))]
        w = random_perm(rng, n)
        lhs = skein.resolve(apply_perm(w, pi)).scale(sign(w))
        if lhs != skein.skein_act(w, skein.resolve(pi)):
            return False
    return True


def word_independence(nmax: int, samples: int = 100) -> bool:
    rng = random.Random(SEED + 7)
    for _ in range(samples):
        n = rng.randint(2, min(max(nmax, 2), 6))
        nc = enumerate_partitions(n, noncrossing_only=True)
        v = skein.NCVector.basis(nc[rng.randrange(len(nc))])
        w = random_perm(rng, n)
        if skein.skein_act(w, v, skein.word_right) != skein.skein_act(w, v, skein.word_left):
            return False
    return True


def upstairs_ranks(nmax: int) -> bool:
    for n in range(1, min(nmax, 7) + 1):
        for k in range(1, n + 1):
            nc = enumerate_partitions(n, k, noncrossing_only=True)
            if rank(dict(fermions.F(pi)._terms) for pi in nc) != narayana(n, k):
                return False
            if rank(dict(fermions.f(pi)._terms) for pi in nc) != narayana(n, k):
                return False
    return True


# -- repsym ---------------------------------------------------------------------------

def character_orthogonality(nmax: int) -> bool:
    for n in range(1, min(max(nmax, 1) + 2, 8) + 1):
        t = repsym.character_table(n)
        size = factorial(n)
        for a, ra in enumerate(t.values):
            for b, rb in enumerate(t.values):
                s = sum(c * x * y for c, x, y in zip(t.class_sizes, ra, rb))
                if s != (size if a == b else 0):
                    return False
        # column orthogonality
        for p in range(len(t.classes)):
            for q in range(len(t.classes)):
                s = sum(row[p] * row[q] for row in t.values)
                if s != (size // t.class_sizes[p] if p == q else 0):
                    return False
    return True


def skein_frobenius(n: int, k: int, m: int | None = None) -> repsym.SymFunc:
    """Frobenius image of the skein module on NC(n, k) or NC(n, k, m)."""
    basis = enumerate_partitions(n, k, m, noncrossing_only=True)
    mats = [skein.rep_matrix(transposition(n, i), basis) for i in range(1, n)]
    return repsym.frobenius_from_rep(mats, n, dim=len(basis))


def flag_product(n: int, k: int, m: int) -> repsym.SymFunc:
    """s_(k-m, k-m, 1^(n-2k+m)) * s_(1^m), zero for invalid shapes."""
    base = repsym.schur_or_zero(n - m, repsym.flag(k - m, n - 2 * k + m))
    return repsym.pieri_vertical(base, m)


def frobenius_images(nmax: int) -> bool:
    for n in range(1, min(nmax, 7) + 1):
        for k in range(1, n + 1):
            for m in range(k + 1):
                if not enumerate_partitions(n, k, m, noncrossing_only=True):
                    if flag_product(n, k, m).coeffs:
                        return False
                    continue
                if skein_frobenius(n, k, m) != flag_product(n, k, m):
                    return False
    return True


def hook_kronecker_rhs(n: int, k: int) -> repsym.SymFunc:
    def kr(a, b, c, d):
        return repsym.kronecker(repsym.schur_or_zero(n, repsym.hook(a, b)), repsym.schur_or_zero(n, repsym.hook(c, d)))

    return kr(k, n - k, n - k + 1, k - 1) - kr(k - 1, n - k + 1, n - k, k)


def hook_kronecker(nmax: int) -> bool:
    for n in range(1, min(max(nmax, 1) + 2, 8) + 1):
        for k in range(1, n + 1):
            lhs = repsym.SymFunc(n)
            for m in range(k + 1):
                lhs = lhs + flag_product(n, k, m)
            if lhs != hook_kronecker_rhs(n, k):
                return False
    return True


def multiplicity_bound(nmax: int) -> bool:
    for n in range(1, min(nmax, 7) + 1):
        for k in range(1, n + 1):
            total = repsym.SymFunc(n)
            for m in range(k + 1):
                total = total + flag_product(n, k, m)
            for lam, c in total.coeffs.items():
                p = list(lam.parts) + [0, 0, 0]
                if c not in (1, 2) or p[1] < p[0] - 1 or p[2] >= 3:
                    return False
    return True


# -- quadring / fdr -------------------------------------------------------------------

def hilbert_tables(nmax: int) -> bool:
    return all(
        quadring.hilbert_series(n, w) == quadring.basis_hilbert_table(n, w)
        for n in range(min(nmax, 6) + 1)
        for w in (quadring.RJ, quadring.RIJ)
    )


def quadratic_basis(nmax: int) -> bool:
    return all(quadring.check_basis(n) for n in range(min(nmax, 6) + 1))


def reduction_confluence(nmax: int) -> bool:
    return all(quadring.check_confluence(n) for n in range(min(nmax, 5) + 1))


def fdr_dimensions(nmax: int) -> bool:
    for n in range(1, min(nmax, 6) + 1):
        for i in range(n + 1):
            for j in range(n + 1):
                if fdr.fdr_dimension(n, i, j) != fdr.fdr_dimension_formula(n, i, j):
                    return False
        if sum(fdr.fdr_dimension(n, n - k, k - 1) for k in range(1, n + 1)) != catalan(n):
            return False
        if any(fdr.fdr_dimension(n, n - k, k - 1) != narayana(n, k) for k in range(1, n + 1)):
            return False
    return True


def fdr_bases(nmax: int) -> bool:
    return all(
        fdr.check_basis_descends(n, k) and fdr.check_theta_injectivity(n, k)
        for n in range(1, min(nmax, 6) + 1)
        for k in range(1, n + 1)
    )


def fdr_orthogonality(nmax: int) -> bool:
    for n in range(1, min(nmax, 5) + 1):
        th, x, d = fdr.invariant_generators(n)
        xd = wedge(x, d)
        for pi in enumerate_partitions(n):
            i, j = n - pi.k, pi.k
            Fp = fermions.F(pi)
            # only monomials landing in bidegree (i, j) can pair nontrivially
            for mono in extalg.monomials_of_bidegree(n, i - 1, j - 2) if i >= 1 and j >= 2 else []:
                if inner(Fp, wedge(xd, Fermion.monomial(mono))):
                    return False
    return True


CHECKS: list[Check] = [
    Check("extalg", "adjointness", adjointness),
    Check("extalg", "sign-twisted Leibniz rule", leibniz),
    Check("extalg", "contraction equivariance", contraction_equivariance),
    Check("extalg", "group action and invariant inner product", action_is_group_action),
    Check("extalg", "bidegree slice dimensions", bidegree_dimensions),
    Check("setpart", "Bell/Stirling/Catalan/Narayana counts", enumeration_counts),
    Check("fermions", "block operators commute", block_operators_commute),
    Check("fermions", "psi commutation and decomposition", psi_identities),
    Check("fermions", "F and f equivariance", fermion_equivariance),
    Check("fermions", "F and f bidegrees", fermion_bidegrees),
    Check("fermions", "antisymmetrized fermion signs", tilde_signs),
    Check("fermions", "n-removal relation", n_removal),
    Check("skein", "Coxeter relations", coxeter_relations),
    Check("skein", "sigma independent of index", sigma_well_defined),
    Check("skein", "F(pi) + F(sigma(pi)) = 0", skein_relation_theorem),
    Check("skein", "greedy = algebraic resolution", resolution_oracles),
    Check("skein", "resolution equivariance", resolution_equivariance),
    Check("skein", "action independent of word", word_independence),
    Check("skein", "noncrossing fermion ranks", upstairs_ranks),
    Check("repsym", "character orthogonality", character_orthogonality),
    Check("repsym", "skein module Frobenius images", frobenius_images),
    Check("repsym", "hook Kronecker identity", hook_kronecker),
    Check("repsym", "multiplicities at most 2", multiplicity_bound),
    Check("quadring", "Hilbert tables match basis count", hilbert_tables),
    Check("quadring", "noncrossing monomial basis", quadratic_basis),
    Check("quadring", "reduction confluence", reduction_confluence),
    Check("fdr", "dimension table", fdr_dimensions),
    Check("fdr", "basis descends and theta injectivity", fdr_bases),
    Check("fdr", "F orthogonal to xi*delta*(anything)", fdr_orthogonality),
]


def run_all(nmax: int = 6, threads: int = 1) -> list[tuple[Check, bool]]:
    """Run every check; results come back in the fixed CHECKS order regardless of threads."""
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: _safe(c, nmax), CHECKS))
    else:
        results = [_safe(c, nmax) for c in CHECKS]
    return list(zip(CHECKS, results))


def _safe(check: Check, nmax: int) -> bool:
    try:
        return bool(check.run(nmax))
    except (AssertionError, ArithmeticError, ValueError):
        return False

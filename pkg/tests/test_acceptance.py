"""Acceptance criteria 1-10, each checked at its stated time limit.

Every criterion prints one PASS/FAIL line in the terminal summary.  A
criterion whose literal statement is false is reported FAIL and its test is a
strict xfail; the corrected statement is asserted by a companion test.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import pytest

from conftest import ACCEPTANCE_LINES
from skeinlab import fdr, fermions, quadring, skein
from skeinlab.checks import flag_product, hook_kronecker_rhs, random_fermion, skein_frobenius
from skeinlab.extalg import parse_fermion, theta, wedge, xi
from skeinlab.repsym import SymFunc, check_coxeter, pieri_vertical
from skeinlab.linalg import rank
from skeinlab.setpart import (
    SegmentedPermutation,
    apply_perm,
    catalan,
    enumerate_partitions,
    narayana,
    parse_partition,
    stirling2,
    transposition,
)
from skeinlab.skein import NCVector

P = parse_partition


@dataclass
class Outcome:
    number: int
    title: str
    limit: float
    parts: dict[str, bool] = field(default_factory=dict)
    corrected: dict[str, bool] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(self.parts.values()) and self.elapsed < self.limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        failed = [k for k, v in self.parts.items() if not v]
        tail = "" if not failed else "  failing: " + "; ".join(failed)
        if self.elapsed >= self.limit:
            tail += "  (time limit exceeded)"
        return f"criterion {self.number:>2} {status}  {self.elapsed:7.2f}s / {self.limit:g}s  {self.title}{tail}"


def _run(number: int, title: str, limit: float, body) -> Outcome:
    out = Outcome(number, title, limit)
    start = time.perf_counter()
    body(out)
    out.elapsed = time.perf_counter() - start
    ACCEPTANCE_LINES.append(out.line())
    return out


def V(*pairs) -> NCVector:
    n = P(pairs[0][1]).n
    return NCVector(n, {P(text): c for c, text in pairs})


# -- criterion bodies ---------------------------------------------------------------------

def _worked_examples(out: Outcome) -> None:
    pi = P("1 3 / 2")
    out.parts["F({1,3/2})"] = fermions.F(pi) == parse_fermion("x3 x2 t3 - x1 x2 t1", 3)
    out.parts["f({1,3/2})"] = fermions.f(pi) == parse_fermion("x2 t3 - x3 t3 - x2 t1 + x1 t1", 3)
    n = 8
    th = [None] + [theta(n, i) for i in range(1, n + 1)]
    x = [None] + [xi(n, i) for i in range(1, n + 1)]
    want = th[5]
    for factor in (th[3], th[2], th[8], x[5] + x[3], x[7], x[2], x[8]):
        want = wedge(want, factor)
    sp = SegmentedPermutation((5, 3, 6, 7, 2, 1, 8, 4), (3, 1, 2, 2))
    out.parts["G(536.7.21.84)"] = fermions.G(sp) == -want
    out.parts["chord resolution"] = skein.resolve(P("1 3 / 2 4")) == V((-1, "1 2 / 3 4"), (-1, "1 4 / 2 3"))
    mu = NCVector.basis(P("1 5 6 / 2 4 / 3"))
    out.parts["cyclic shift"] = skein.skein_act((2, 3, 4, 5, 6, 1), mu) == -NCVector.basis(P("1 2 6 / 3 5 / 4"))
    w0 = (6, 5, 4, 3, 2, 1)
    image = NCVector.basis(apply_perm(w0, P("1 5 6 / 2 4 / 3"))).scale((-1) ** comb(6, 2))
    out.parts["longest element"] = skein.skein_act(w0, mu) == image


def _coxeter(out: Outcome) -> None:
    out.parts["|NC(6)| = 132"] = len(enumerate_partitions(6, noncrossing_only=True)) == 132
    for n in range(2, 7):
        basis = enumerate_partitions(n, noncrossing_only=True)
        mats = [skein.rep_matrix(transposition(n, i), basis) for i in range(1, n)]
        out.parts[f"n={n}"] = check_coxeter(mats) == []


def _oracle(out: Outcome) -> None:
    parts = enumerate_partitions(6)
    out.parts["|Pi(6)| = 203"] = len(parts) == 203
    agree = integral = True
    for pi in parts:
        alg = skein.resolve_algebraic(pi)
        integral &= alg.is_integral()
        agree &= alg == skein.resolve_greedy(pi, "lex") == skein.resolve_greedy(pi, "most-tangled")
    out.parts["greedy == algebraic, both policies"] = agree
    out.parts["integer coefficients"] = integral


def _skein_relation(out: Outcome) -> None:
    ok, count = True, 0
    for pi in enumerate_partitions(6):
        for i in skein.valid_sigma_indices(pi):
            count += 1
            total = fermions.F(pi)
            for mu, c in skein.sigma(pi, i).items():
                total = total + fermions.F(mu).scale(c)
            ok &= not total
    out.parts["F(pi) + F(sigma(pi)) = 0 on ANC(6)"] = ok and count > 0
    rng = random.Random(7)
    n, trials = 5, 0
    comm = mixed = pairs = decomp = True
    pb, pp = fermions.psi_block, fermions.psi_pair
    while trials < 200:
        f = random_fermion(rng, n, terms=4)
        a = {x for x in range(1, n + 1) if rng.random() < 0.5}
        b = {x for x in range(1, n + 1) if rng.random() < 0.5} - a
        c = {x for x in range(1, n + 1) if rng.random() < 0.5}
        d = {x for x in range(1, n + 1) if rng.random() < 0.5} - c
        if not (a and b and c and d):
            continue
        trials += 1
        comm &= pb(a, pb(c, f)) == pb(c, pb(a, f))
        mixed &= pp(a, b, pb(c, f)) == pb(c, pp(a, b, f))
        pairs &= pp(a, b, pp(c, d, f)) == pp(c, d, pp(a, b, f))
        decomp &= pb(a | b, f) == pb(a, f) + pp(a, b, f) + pb(b, f)
    out.parts["psi_A psi_C commute"] = comm
    out.parts["psi_(A,B) psi_C commute"] = mixed
    out.parts["psi_(A,B) psi_(C,D) commute"] = pairs
    out.parts["psi of a disjoint union"] = decomp


def _ranks(out: Outcome) -> None:
    for n in range(1, 8):
        good = True
        for k in range(1, n + 1):
            nc = enumerate_partitions(n, k, noncrossing_only=True)
            good &= rank(dict(fermions.F(pi)._terms) for pi in nc) == narayana(n, k)
            good &= rank(dict(fermions.f(pi)._terms) for pi in nc) == narayana(n, k)
        out.parts[f"ranks n={n}"] = good
    out.parts["|NC(n)| = Cat(n), n <= 10"] = all(
        len(enumerate_partitions(n, noncrossing_only=True)) == catalan(n) for n in range(11)
    )


def _frobenius(out: Outcome) -> None:
    for n in range(1, 8):
        good = True
        for k in range(1, n + 1):
            for m in range(k + 1):
                want = flag_product(n, k, m)
                if enumerate_partitions(n, k, m, noncrossing_only=True):
                    good &= skein_frobenius(n, k, m) == want
                else:
                    good &= not want.coeffs
        out.parts[f"n={n}"] = good
    s = SymFunc.schur
    out.parts["V(9,5,1) by Pieri"] = pieri_vertical(s((4, 4)), 1) == s((5, 4)) + s((4, 4, 1))


def _hook_kronecker(out: Outcome) -> None:
    # the second hook factor is (n-k+1, 1^(k-1)) so that both Kronecker factors have degree n
    for n in range(1, 9):
        good = True
        for k in range(1, n + 1):
            lhs = SymFunc(n)
            for m in range(k + 1):
                lhs = lhs + flag_product(n, k, m)
            good &= lhs == hook_kronecker_rhs(n, k)
        out.parts[f"n={n}"] = good


def _shifted_formula(n: int, i: int, j: int) -> int:
    def b(a, c):
        return comb(a, c) if 0 <= c <= a else 0

    if i + j >= n:
        return 0
    return b(n - 1, i) * b(n - 1, j) - b(n - 1, i + 1) * b(n - 1, j + 1)


def _fdr(out: Outcome) -> None:
    bad_literal = bad_corrected = 0
    for n in range(1, 7):
        for i in range(n + 1):
            for j in range(n + 1):
                d = fdr.fdr_dimension(n, i, j)
                bad_literal += d != _shifted_formula(n, i, j)
                bad_corrected += d != fdr.fdr_dimension_formula(n, i, j)
    out.parts["closed form C(n-1,i)C(n-1,j) - C(n-1,i+1)C(n-1,j+1)"] = bad_literal == 0
    out.corrected["closed form C(n-1,i)C(n-1,j) - C(n-1,i-1)C(n-1,j-1)"] = bad_corrected == 0
    out.parts["Narayana diagonal and Catalan total"] = all(
        [fdr.fdr_dimension(n, n - k, k - 1) for k in range(1, n + 1)] == [narayana(n, k) for k in range(1, n + 1)]
        and sum(narayana(n, k) for k in range(1, n + 1)) == catalan(n)
        for n in range(1, 7)
    )
    out.parts["basis descends"] = all(fdr.check_basis_descends(n, k) for n in range(1, 7) for k in range(1, n + 1))
    out.parts["theta injective"] = all(fdr.check_theta_injectivity(n, k) for n in range(1, 7) for k in range(1, n + 1))


def _quadring(out: Outcome) -> None:
    closed = True
    for n in range(7):
        a, b = quadring.hilbert_series(n, quadring.RIJ), quadring.hilbert_series(n, quadring.RJ)
        for m in range(n + 1):
            for k in range(n + 1):
                closed &= a[m][k] == comb(n, m) * narayana(m, k)
                closed &= b[m][k] == comb(n, m) * stirling2(m, k)
    out.parts["closed forms"] = closed
    out.parts["basis enumeration"] = all(
        quadring.hilbert_series(n, w) == quadring.basis_hilbert_table(n, w)
        for n in range(7)
        for w in (quadring.RIJ, quadring.RJ)
    )
    out.parts["noncrossing monomials form a basis"] = all(quadring.check_basis(n) for n in range(7))
    out.parts["confluence n <= 5"] = all(quadring.check_confluence(n) for n in range(6))


def _signs(out: Outcome) -> None:
    parts5 = enumerate_partitions(5)
    lit = [pi for pi in parts5 if fermions.tildeF(pi) != fermions.F(pi).scale(fermions.tilde_sign(pi.k))]
    out.parts[f"tildeF = eps(k) F ({len(lit)} of {len(parts5)} partitions disagree)"] = not lit
    out.corrected["tildeF = (-1)^(n-k) eps(k) F"] = all(
        fermions.tildeF(pi) == fermions.F(pi).scale(fermions.tildeF_sign(5, pi.k)) for pi in parts5
    )
    out.corrected["tildef = eps(k) f"] = all(
        fermions.tildef(pi) == fermions.f(pi).scale(fermions.tilde_sign(pi.k)) for pi in parts5
    )
    lit = [pi for pi in parts5 if not fermions.check_n_removal(pi, "k-1")]
    out.parts[f"n-removal with (-1)^(k-1) for a singleton {{n}} ({len(lit)} disagree)"] = not lit
    out.corrected["n-removal with (-1)^(n-k-1) for a singleton {n}"] = all(
        fermions.check_n_removal(pi, "corrected") for pi in parts5
    )


CRITERIA = {
    1: ("worked examples", 1.0, _worked_examples),
    2: ("Coxeter relations, n <= 6", 60.0, _coxeter),
    3: ("greedy vs algebraic resolution on Pi(6)", 120.0, _oracle),
    4: ("skein relation and psi identities", 60.0, _skein_relation),
    5: ("noncrossing fermion ranks", 120.0, _ranks),
    6: ("Frobenius images of skein modules", 300.0, _frobenius),
    7: ("hook Kronecker identity, n <= 8", 60.0, _hook_kronecker),
    8: ("coinvariant dimensions and bases, n <= 6", 300.0, _fdr),
    9: ("quadratic ring Hilbert series", 120.0, _quadring),
    10: ("antisymmetrization and n-removal signs on Pi(5)", 60.0, _signs),
}


@lru_cache(maxsize=None)
def outcome(number: int) -> Outcome:
    title, limit, body = CRITERIA[number]
    return _run(number, title, limit, body)


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6, 7, 9])
def test_criterion(number):
    out = outcome(number)
    assert all(out.parts.values()), out.parts
    assert out.elapsed < out.limit


@pytest.mark.xfail(strict=True, reason="the shifted closed form is negative at small (i, j); see notes")
def test_criterion_8():
    out = outcome(8)
    assert out.ok


def test_criterion_8_other_parts_and_corrected_form():
    out = outcome(8)
    assert all(v for k, v in out.parts.items() if not k.startswith("closed form"))
    assert all(out.corrected.values())
    assert out.elapsed < out.limit


@pytest.mark.xfail(strict=True, reason="both literal signs are off by (-1)^(n-k) on part of Pi(5); see notes")
def test_criterion_10():
    out = outcome(10)
    assert out.ok


def test_criterion_10_corrected_signs():
    out = outcome(10)
    assert all(out.corrected.values())
    assert out.elapsed < out.limit

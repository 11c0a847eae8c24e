"""Fermionic diagonal coinvariants: the quotient by the ideal generated by theta, xi, delta.

The quotient is never built.  Each bidegree slice of the ideal is spanned by
theta, xi and delta times all monomials of the complementary bidegree, and
every statement reduces to an exact rank computation in one slice.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from skeinlab.extalg import Fermion, monomials_of_bidegree, wedge
from skeinlab.fermions import f as f_fermion
from skeinlab.linalg import EchelonBasis, OnceCache
from skeinlab.setpart import enumerate_partitions, narayana


def invariant_generators(n: int) -> tuple[Fermion, Fermion, Fermion]:
    """(theta, xi, delta) = (sum theta_i, sum xi_i, sum theta_i xi_i)."""
    th = Fermion._raw(n, {1 << i: 1 for i in range(n)})
    x = Fermion._raw(n, {1 << (n + i): 1 for i in range(n)})
    d = Fermion._raw(n, {(1 << i) | (1 << (n + i)): 1 for i in range(n)})
    return th, x, d


def ideal_spanning_set(n: int, i: int, j: int) -> list[Fermion]:
    """theta, xi, delta times every monomial landing in bidegree (i, j)."""
    th, x, d = invariant_generators(n)
    out = []
    for gen, (a, b) in ((th, (i - 1, j)), (x, (i, j - 1)), (d, (i - 1, j - 1))):
        if a < 0 or b < 0:
            continue
        for mono in monomials_of_bidegree(n, a, b):
            v = wedge(gen, Fermion.monomial(mono))
            if v:
                out.append(v)
    return out


_SLICES = OnceCache()


def _slice_basis(n: int, i: int, j: int) -> EchelonBasis:
    def build():
        basis = EchelonBasis()
        for v in ideal_spanning_set(n, i, j):
            basis.add(dict(v._terms))
        return basis

    return _SLICES.get((n, i, j), build)


def _check_bidegree(n: int, i: int, j: int) -> None:
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"bidegree ({i}, {j}) out of range for n={n}")


def ideal_slice_dimension(n: int, i: int, j: int) -> int:
    _check_bidegree(n, i, j)
    return _slice_basis(n, i, j).rank


def fdr_dimension(n: int, i: int, j: int) -> int:
    return comb(n, i) * comb(n, j) - ideal_slice_dimension(n, i, j)


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def fdr_dimension_formula(n: int, i: int, j: int) -> int:
    """C(n-1,i)C(n-1,j) - C(n-1,i-1)C(n-1,j-1) when i + j < n, else 0.

    Matches the exact ideal ranks for n <= 6, and the table sums to C(2n-1, n).
    On the antidiagonal i + j = n - 1 it equals the Narayana number Nar(n, n - i).
    """
    if n == 0:
        return 1 if i == j == 0 else 0
    if i + j >= n:
        return 0
    return _binom(n - 1, i) * _binom(n - 1, j) - _binom(n - 1, i - 1) * _binom(n - 1, j - 1)


def _nc_fermions(n: int, k: int) -> list[Fermion]:
    return [f_fermion(pi) for pi in enumerate_partitions(n, k, noncrossing_only=True)]


def check_basis_descends(n: int, k: int, fermions: Sequence[Fermion] | None = None) -> bool:
    """Do the f_pi (pi noncrossing with k blocks) stay independent modulo the ideal?

    ``fermions`` replaces the family, e.g. for a corrupted negative control.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    fs = _nc_fermions(n, k) if fermions is None else list(fermions)
    i, j = n - k, k - 1
    base = _slice_basis(n, i, j)
    ext = base.copy()
    for v in fs:
        ext.add(dict(v._terms))
    return ext.rank == narayana(n, k) + base.rank


def check_theta_injectivity(n: int, k: int, fermions: Sequence[Fermion] | None = None) -> bool:
    """Is theta * f_pi, over noncrossing pi with k blocks, a linearly independent family?"""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    fs = _nc_fermions(n, k) if fermions is None else list(fermions)
    th = invariant_generators(n)[0]
    basis = EchelonBasis()
    for v in fs:
        basis.add(dict(wedge(th, v)._terms))
    return basis.rank == narayana(n, k)


@lru_cache(maxsize=None)
def dimension_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows i = 0..n, columns j = 0..n of dim (FDR_n)_{i,j}."""
    return tuple(tuple(fdr_dimension(n, i, j) for j in range(n + 1)) for i in range(n + 1))

"""The commutative model: variables y_B for nonempty B in [n], modulo quadratic relations.

J kills y_A y_B whenever A and B meet, so only monomials with pairwise
disjoint supports survive; ``DisjointMonomial`` enforces that structurally.
I rewrites a crossing pair y_A y_B into the signed noncrossing splits of
A u B.  Modulo I + J every monomial reduces to a unique combination of
monomials with pairwise disjoint, noncrossing supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from skeinlab.extalg import Fermion, theta_product
from skeinlab.fermions import rho_block
from skeinlab.linalg import EchelonBasis
from skeinlab.setpart import (
    MAX_N,
    _blocks_noncrossing,
    enumerate_partitions,
    narayana,
    stirling2,
)
from skeinlab.skein import resolve_blocks

RJ = "R/J"
RIJ = "R/(I+J)"


@dataclass(frozen=True)
class DisjointMonomial:
    n: int
    supports: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, supports: Iterable[Iterable[int]]):
        if not isinstance(n, int) or not 0 <= n <= MAX_N:
            raise ValueError(f"n must be in 0..{MAX_N}")
        sup = tuple(sorted(tuple(sorted(set(s))) for s in supports))
        seen: set[int] = set()
        for s in sup:
            if not s:
                raise ValueError("supports must be nonempty")
            for x in s:
                if not 1 <= x <= n:
                    raise ValueError(f"element {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"supports are not disjoint (element {x} repeats)")
                seen.add(x)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "supports", sup)

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(x for s in self.supports for x in s))

    @property
    def bidegree(self) -> tuple[int, int]:
        """(sum |B|, number of factors)."""
        return sum(len(s) for s in self.supports), len(self.supports)

    def is_noncrossing(self) -> bool:
        return _blocks_noncrossing(self.supports)

    def __str__(self) -> str:
        if not self.supports:
            return "1"
        return " ".join("y_{" + ",".join(map(str, s)) + "}" for s in self.supports)


def reduce(m: DisjointMonomial, policy: str = "lex") -> dict[DisjointMonomial, int]:
    """Normal form modulo I + J, as {noncrossing monomial: coefficient}."""
    res = resolve_blocks(m.supports, policy)
    return {DisjointMonomial(m.n, k): c for k, c in res.items()}


def rho_image(m: DisjointMonomial) -> Fermion:
    """Act by the product of block operators rho_B on theta_U, U the union of the supports."""
    v = theta_product(m.n, m.ground)
    for s in reversed(m.supports):
        v = rho_block(s, v)
    return v


def hilbert_series(n: int, which: str = RIJ) -> list[list[int]]:
    """Table h[m][k] = coefficient of q^m t^k."""
    if not isinstance(n, int) or not 0 <= n <= MAX_N:
        raise ValueError(f"n must be in 0..{MAX_N}")
    if which not in (RJ, RIJ):
        raise ValueError(f"which must be {RJ!r} or {RIJ!r}")
    count = stirling2 if which == RJ else narayana
    return [[comb(n, m) * count(m, k) for k in range(n + 1)] for m in range(n + 1)]


def _subsets(n: int):
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)


def _relabel(u: tuple[int, ...], blocks) -> list[tuple[int, ...]]:
    return [tuple(u[x - 1] for x in b) for b in blocks]


def enumerate_monomials(n: int, noncrossing_only: bool = False) -> list[DisjointMonomial]:
    """All disjoint-support monomials of [n] (or only the noncrossing ones)."""
    out = []
    for u in _subsets(n):
        for pi in enumerate_partitions(len(u), noncrossing_only=noncrossing_only):
            out.append(DisjointMonomial(n, _relabel(u, pi.blocks)))
    return out


def basis_hilbert_table(n: int, which: str = RIJ) -> list[list[int]]:
    """Coefficient table obtained by counting the monomial basis directly."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for mono in enumerate_monomials(n, noncrossing_only=(which == RIJ)):
        m, k = mono.bidegree
        table[m][k] += 1
    return table


def check_basis(n: int) -> bool:
    """For each ground set U: noncrossing monomials on U have independent rho-images,
    and every disjoint-support monomial on U has the same rho-image as its reduction."""
    for u in _subsets(n):
        nc = [DisjointMonomial(n, _relabel(u, pi.blocks)) for pi in enumerate_partitions(len(u), noncrossing_only=True)]
        basis = EchelonBasis()
        for mono in nc:
            if not basis.add(dict(rho_image(mono)._terms)):
                return False
        for pi in enumerate_partitions(len(u)):
            mono = DisjointMonomial(n, _relabel(u, pi.blocks))
            lhs = rho_image(mono)
            rhs = Fermion.zero(n)
            for r, c in reduce(mono).items():
                if not r.is_noncrossing():
                    return False
                rhs = rhs + rho_image(r).scale(c)
            if lhs != rhs:
                return False
    return True


def check_confluence(n: int) -> bool:
    """Two different crossing-pair orders give the same normal form for every monomial."""
    return all(reduce(m, "lex") == reduce(m, "most-tangled") for m in enumerate_monomials(n))

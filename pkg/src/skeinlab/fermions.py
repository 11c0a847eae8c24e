"""Block operators and the fermions attached to set partitions.

The block operator of a nonempty B is the derivation
``rho_B(f) = sum_{i != j in B} xi_i * (theta_j . f)`` (or ``xi_i * (theta_i . f)``
for a singleton B).  F_pi applies the block operators of all blocks to
theta_1...theta_n; f_pi contracts F_pi by xi_1 + ... + xi_n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

from skeinlab.extalg import (
    Fermion,
    _norm,
    act,
    contract,
    embed,
    substitute_zero,
    theta,
    theta_product,
    wedge,
    xi,
)
from skeinlab.setpart import (
    SegmentedPermutation,
    SetPartition,
    canonical_segperm,
    odd_part_sum,
    sign,
    to_partition,
)

ANTISYMMETRIZE_LIMIT = 10**7


def _xi_sum(n: int) -> Fermion:
    return Fermion._raw(n, {1 << (n + i): 1 for i in range(n)})


def _apply_pairs(f: Fermion, pairs: Iterable[tuple[int, int]]) -> Fermion:
    """sum over (i, j) of xi_i * (theta_j . f)."""
    n = f.n
    pairs = list(pairs)
    out: dict = {}
    for mask, c in f._terms.items():
        for i, j in pairs:
            tb = 1 << (j - 1)
            if not mask & tb:
                continue
            s = -1 if (mask & (tb - 1)).bit_count() & 1 else 1
            m = mask ^ tb
            xb = 1 << (n + i - 1)
            if m & xb:
                continue
            if (m & (xb - 1)).bit_count() & 1:
                s = -s
            key = m | xb
            v = out.get(key, 0) + s * c
            if v:
                out[key] = v
            else:
                del out[key]
    return Fermion._raw(n, out)


def _check_subset(n: int, block: Iterable[int], name: str = "block") -> tuple[int, ...]:
    b = tuple(sorted(set(block)))
    if any(not 1 <= x <= n for x in b):
        raise ValueError(f"{name} {b} is not a subset of 1..{n}")
    return b


def rho_block(block: Iterable[int], f: Fermion) -> Fermion:
    b = _check_subset(f.n, block)
    if not b:
        raise ValueError("block operator needs a nonempty block")
    if len(b) == 1:
        return _apply_pairs(f, [(b[0], b[0])])
    return _apply_pairs(f, [(i, j) for i in b for j in b if i != j])


def psi_block(block: Iterable[int], f: Fermion) -> Fermion:
    b = _check_subset(f.n, block)
    if len(b) <= 1:
        return Fermion.zero(f.n)
    return _apply_pairs(f, [(i, j) for i in b for j in b if i != j])


def psi_pair(a: Iterable[int], b: Iterable[int], f: Fermion) -> Fermion:
    a = _check_subset(f.n, a, "set")
    b = _check_subset(f.n, b, "set")
    if set(a) & set(b):
        raise ValueError(f"psi_pair needs disjoint sets, got {a} and {b}")
    pairs = [(x, y) for x in a for y in b] + [(y, x) for x in a for y in b]
    return _apply_pairs(f, pairs)


def _check_partition(pi: SetPartition, f: Fermion) -> None:
    if pi.n != f.n:
        raise ValueError(f"partition of [{pi.n}] applied to a fermion of rank {f.n}")


def rho_partition(pi: SetPartition, f: Fermion, order: Sequence[int] | None = None) -> Fermion:
    """Compose the block operators of pi; ``order`` permutes the blocks (rightmost applied first)."""
    _check_partition(pi, f)
    blocks = pi.blocks if order is None else [pi.blocks[i] for i in order]
    for b in reversed(blocks):
        f = rho_block(b, f)
    return f


def psi_partition(pi: SetPartition, f: Fermion, order: Sequence[int] | None = None) -> Fermion:
    _check_partition(pi, f)
    blocks = pi.blocks if order is None else [pi.blocks[i] for i in order]
    for b in reversed(blocks):
        f = psi_block(b, f)
    return f


@lru_cache(maxsize=None)
def F(pi: SetPartition) -> Fermion:
    """F_pi = rho_pi(theta_1 ... theta_n), of bidegree (n - k, k)."""
    return rho_partition(pi, theta_product(pi.n))


@lru_cache(maxsize=None)
def f(pi: SetPartition) -> Fermion:
    """f_pi = (xi_1 + ... + xi_n) . F_pi, of bidegree (n - k, k - 1)."""
    return contract(_xi_sum(pi.n), F(pi))


# -- segmented permutations -------------------------------------------------------

def G(sp: SegmentedPermutation) -> Fermion:
    n = sp.n
    segs = sp.segments()
    eps = sign(sp.w) * (-1) ** odd_part_sum(sp.alpha)
    out = Fermion._raw(n, {0: eps})
    for seg in segs:
        for x in seg[:-1]:
            out = wedge(out, theta(n, x))
    for seg in segs:
        letters = seg[:-1] if len(seg) > 1 else seg
        out = wedge(out, Fermion._raw(n, {1 << (n + x - 1): 1 for x in letters}))
    return out


def g(sp: SegmentedPermutation) -> Fermion:
    return contract(_xi_sum(sp.n), G(sp)).scale((-1) ** (sp.n - sp.k))


def _parabolic(pi: SetPartition) -> Iterable[tuple[int, ...]]:
    """All w in the Young subgroup permuting each block of pi within itself."""
    n = pi.n
    per_block = [list(permutations(b)) for b in pi.blocks]
    for images in product(*per_block):
        w = [0] * n
        for b, img in zip(pi.blocks, images):
            for x, y in zip(b, img):
                w[x - 1] = y
        yield tuple(w)


def antisymmetrize(subgroup: SetPartition, signed: bool, f: Fermion) -> Fermion:
    """sum over w in the Young subgroup of ``subgroup`` of (sign(w) if signed) * w.f."""
    if subgroup.n != f.n:
        raise ValueError("subgroup and fermion live on different ground sets")
    order = prod(factorial(len(b)) for b in subgroup.blocks)
    if order > ANTISYMMETRIZE_LIMIT:
        raise ValueError(f"Young subgroup of order {order} exceeds the limit {ANTISYMMETRIZE_LIMIT}")
    out: dict = {}
    for w in _parabolic(subgroup):
        c = sign(w) if signed else 1
        for k, v in act(w, f)._terms.items():
            t = out.get(k, 0) + c * v
            if t:
                out[k] = t
            else:
                del out[k]
    return Fermion._raw(f.n, out)


def _tilde(sp: SegmentedPermutation, base: Fermion) -> Fermion:
    pi = to_partition(sp)
    den = prod(factorial(a - 1) for a in sp.alpha)
    res = antisymmetrize(pi, True, base)
    return Fermion._raw(sp.n, {k: _norm(Fraction(v, den)) for k, v in res._terms.items()})


def tildeF(sp: SegmentedPermutation | SetPartition) -> Fermion:
    if isinstance(sp, SetPartition):
        sp = canonical_segperm(sp)
    return _tilde(sp, G(sp))


def tildef(sp: SegmentedPermutation | SetPartition) -> Fermion:
    if isinstance(sp, SetPartition):
        sp = canonical_segperm(sp)
    return _tilde(sp, g(sp))


def tilde_sign(k: int) -> int:
    """+1 when k = 0, 3 mod 4 and -1 when k = 1, 2 mod 4."""
    return 1 if k % 4 in (0, 3) else -1


def tildeF_sign(n: int, k: int) -> int:
    """The sign c with tildeF(pi) == c * F(pi) for pi of [n] with k blocks.

    This is tilde_sign(k) twisted by (-1)^(n-k); e.g. for {1,2} both sides
    equal theta_1 xi_1 - theta_2 xi_2.
    """
    return (-1) ** (n - k) * tilde_sign(k)


def tildef_sign(n: int, k: int) -> int:
    """The sign c with tildef(pi) == c * f(pi); it depends on k alone."""
    return tilde_sign(k)


# -- restriction --------------------------------------------------------------------

def remove_last(pi: SetPartition) -> SetPartition:
    n = pi.n
    blocks = [tuple(x for x in b if x != n) for b in pi.blocks]
    return SetPartition(n - 1, [b for b in blocks if b])


def n_removal_sides(pi: SetPartition, singleton_sign: str = "corrected") -> tuple[Fermion, Fermion]:
    """(left, right) of the relation expressing the reduced fermion through the full one.

    When n is a singleton block the right side is c * (xi_n . tildeF(pi)).
    ``singleton_sign="corrected"`` uses c = (-1)^(n-k-1), which holds for every
    partition checked (all of [n] up to n = 6); ``"k-1"`` uses c = (-1)^(k-1),
    which fails for odd n.
    """
    if singleton_sign not in ("corrected", "k-1"):
        raise ValueError(f"unknown singleton_sign {singleton_sign!r}")
    n, k = pi.n, pi.k
    if n < 2:
        raise ValueError("n-removal needs n >= 2")
    left = embed(tildeF(remove_last(pi)), n)
    full = tildeF(pi)
    block = pi.block_of(n)
    if len(block) >= 3:
        right = contract(theta(n, n), substitute_zero(full, xi(n, n))).scale((-1) ** n)
    elif len(block) == 2:
        i = block[0]
        right = contract(theta(n, i), full).scale((-1) ** (n - 1))
    else:
        e = n - k - 1 if singleton_sign == "corrected" else k - 1
        right = contract(xi(n, n), full).scale((-1) ** e)
    return left, right


def check_n_removal(pi: SetPartition, singleton_sign: str = "corrected") -> bool:
    left, right = n_removal_sides(pi, singleton_sign)
    return left == right

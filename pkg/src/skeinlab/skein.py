"""The skein action on noncrossing partitions and the crossing resolution p.

Resolution is computed two ways: ``resolve_algebraic`` expands F_pi in the
basis of noncrossing fermions by exact elimination, and ``resolve_greedy``
untangles crossing block pairs with the two-block rule.  They must agree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from skeinlab.fermions import F
from skeinlab.linalg import EchelonBasis, OnceCache
from skeinlab.setpart import (
    SetPartition,
    _crossing_blocks,
    apply_perm,
    check_perm,
    cyclic_decomposition,
    enumerate_partitions,
    format_partition,
    inverse,
    is_noncrossing,
    transposition,
)

Coeff = int | Fraction


class NCVector:
    """An exact linear combination of noncrossing partitions of [n]."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[SetPartition, Coeff] | None = None):
        self.n = n
        out = {}
        for pi, c in (terms or {}).items():
            if pi.n != n:
                raise ValueError(f"partition {pi} is not a partition of [{n}]")
            if not is_noncrossing(pi):
                raise ValueError(f"partition {pi} is crossing")
            if c:
                out[pi] = out.get(pi, 0) + c
        self._terms = {k: v for k, v in out.items() if v}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "NCVector":
        v = cls.__new__(cls)
        v.n = n
        v._terms = terms
        return v

    @classmethod
    def basis(cls, pi: SetPartition) -> "NCVector":
        return cls(pi.n, {pi: 1})

    @property
    def terms(self) -> dict[SetPartition, Coeff]:
        return dict(self._terms)

    def items(self) -> list[tuple[SetPartition, Coeff]]:
        """Terms ordered by (block count, singleton count, blocks)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coeff(self, pi: SetPartition) -> Coeff:
        return self._terms.get(pi, 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self) -> Iterator[SetPartition]:
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, NCVector):
            return self.n == other.n and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: "NCVector"):
        if self.n != other.n:
            raise ValueError(f"vectors over [{self.n}] and [{other.n}]")

    def __add__(self, other: "NCVector") -> "NCVector":
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            t = out.get(k, 0) + v
            if t:
                out[k] = t
            else:
                del out[k]
        return NCVector._raw(self.n, out)

    def __neg__(self) -> "NCVector":
        return NCVector._raw(self.n, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "NCVector") -> "NCVector":
        return self + (-other)

    def scale(self, c) -> "NCVector":
        if not c:
            return NCVector._raw(self.n, {})
        return NCVector._raw(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"NCVector({self.n}, {format_ncvector(self)!r})"

    def __str__(self) -> str:
        return format_ncvector(self)


def format_ncvector(v: NCVector) -> str:
    if not v:
        return "0"
    parts = []
    for idx, (pi, c) in enumerate(v.items()):
        body = "{" + format_partition(pi) + "}"
        neg = c < 0
        mag = -c if neg else c
        text = body if mag == 1 else f"{mag}*{body}"
        if idx == 0:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)


def _accumulate(out: dict, vec: Mapping, c: Coeff) -> None:
    for k, v in vec.items():
        t = out.get(k, 0) + c * v
        if t:
            out[k] = t
        else:
            del out[k]


# -- sigma and the skein action -------------------------------------------------------

def valid_sigma_indices(pi: SetPartition) -> list[int]:
    """Indices i for which s_i(pi) is noncrossing while pi is not."""
    if is_noncrossing(pi):
        return []
    return [
        i
        for i in range(1, pi.n)
        if not pi.same_block(i, i + 1) and is_noncrossing(apply_perm(transposition(pi.n, i), pi))
    ]


def _sigma_at(pi: SetPartition, i: int) -> NCVector:
    n = pi.n
    bi, bj = set(pi.block_of(i)), set(pi.block_of(i + 1))
    rest = [b for b in pi.blocks if i not in b and i + 1 not in b]

    def build(x, y):
        return SetPartition(n, rest + [sorted(x), sorted(y)])

    terms = {
        build((bi - {i}) | {i + 1}, (bj - {i + 1}) | {i}): 1,
    }
    p2 = build((bi | bj) - {i, i + 1}, {i, i + 1})
    terms[p2] = terms.get(p2, 0) + 1
    if len(bi) > 2:
        p3 = build(bi - {i}, bj | {i})
        terms[p3] = terms.get(p3, 0) - 1
    if len(bj) > 2:
        p4 = build(bj - {i + 1}, bi | {i + 1})
        terms[p4] = terms.get(p4, 0) - 1
    return NCVector(n, terms)


def sigma(pi: SetPartition, i: int | None = None) -> NCVector:
    """Resolve an almost noncrossing partition.

    With ``i`` given, uses that index.  Without it, evaluates every valid index
    and checks that they agree.
    """
    valid = valid_sigma_indices(pi)
    if not valid:
        raise ValueError(f"{format_partition(pi)} is not almost noncrossing")
    if i is not None:
        if i not in valid:
            raise ValueError(f"s_{i} does not make {format_partition(pi)} noncrossing")
        return _sigma_at(pi, i)
    results = [_sigma_at(pi, j) for j in valid]
    for j, r in zip(valid[1:], results[1:]):
        if r != results[0]:
            raise AssertionError(f"sigma of {format_partition(pi)} differs between s_{valid[0]} and s_{j}")
    return results[0]


# sign of the noncrossing branch; a module global so negative-control tests can flip it
_SKEIN_SIGN = -1


@lru_cache(maxsize=None)
def _skein_si_basis(i: int, pi: SetPartition, flat_sign: int) -> tuple[tuple[SetPartition, Coeff], ...]:
    moved = apply_perm(transposition(pi.n, i), pi)
    if is_noncrossing(moved):
        return ((moved, flat_sign),)
    return tuple(_sigma_at(moved, i)._terms.items())


def skein_si(i: int, v: NCVector) -> NCVector:
    if not 1 <= i < v.n:
        raise ValueError(f"s_{i} undefined for n={v.n}")
    out: dict = {}
    for pi, c in v._terms.items():
        _accumulate(out, dict(_skein_si_basis(i, pi, _SKEIN_SIGN)), c)
    return NCVector._raw(v.n, out)


def word_right(w: Sequence[int]) -> list[int]:
    """Indices (i_1, ..., i_r) with w = s_{i_1} ... s_{i_r}, found by clearing right descents."""
    w = list(w)
    rev = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                rev.append(i + 1)
                break
        else:
            break
    return rev[::-1]


def word_left(w: Sequence[int]) -> list[int]:
    """Another reduced word for w, found by clearing left descents."""
    return word_right(inverse(w))[::-1]


def skein_act(w: Sequence[int], v: NCVector, word: Callable[[Sequence[int]], list[int]] = word_right) -> NCVector:
    """Act by w through a word in adjacent transpositions, rightmost letter first."""
    w = check_perm(w, v.n)
    for i in reversed(word(w)):
        v = skein_si(i, v)
    return v


def rep_matrix(w: Sequence[int], basis: Sequence[SetPartition]) -> list[list[int]]:
    """Matrix of w in the given noncrossing basis; column j is w acting on basis[j]."""
    index = {pi: r for r, pi in enumerate(basis)}
    size = len(basis)
    mat = [[0] * size for _ in range(size)]
    for col, pi in enumerate(basis):
        image = skein_act(w, NCVector.basis(pi))
        for mu, c in image._terms.items():
            if mu not in index:
                raise ValueError(f"basis is not stable: {format_partition(mu)} escapes it")
            if not (isinstance(c, int) or c.denominator == 1):
                raise ValueError("non-integral matrix entry")
            mat[index[mu]][col] = int(c)
    return mat


# -- resolution by linear algebra ------------------------------------------------------------

_BASES = OnceCache()


def _nc_basis(n: int, k: int) -> EchelonBasis:
    def build():
        basis = EchelonBasis(track=True)
        for mu in enumerate_partitions(n, k, noncrossing_only=True):
            if not basis.add(dict(F(mu)._terms), mu):
                raise ArithmeticError(f"noncrossing fermions dependent at {format_partition(mu)}")
        return basis

    return _BASES.get((n, k), build)


def resolve_algebraic(pi: SetPartition) -> NCVector:
    """Coefficients c with F_pi = sum_mu c_mu F_mu over noncrossing mu."""
    if is_noncrossing(pi):
        return NCVector.basis(pi)
    sol = _nc_basis(pi.n, pi.k).solve(dict(F(pi)._terms))
    if sol is None:
        raise ArithmeticError(f"F of {format_partition(pi)} is outside the noncrossing span")
    return NCVector(pi.n, sol)


# -- resolution by untangling -----------------------------------------------------------------

Blocks = tuple[tuple[int, ...], ...]


def _canon(blocks: Iterable[Iterable[int]]) -> Blocks:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def two_block_terms(a: Iterable[int], b: Iterable[int]) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Signed noncrossing splits (eps, S, T) of A u B, dropping eps = 0."""
    intervals = cyclic_decomposition(a, b)
    size = len(intervals)
    if size == 2:
        return [(1, *sorted((intervals[0], intervals[1])))]
    out = []
    seen = set()
    for start in range(size):
        for r in range(1, size):
            s = tuple(sorted(x for t in range(r) for x in intervals[(start + t) % size]))
            t_ = tuple(sorted(x for q in range(r, size) for x in intervals[(start + q) % size]))
            key = frozenset((s, t_))
            if key in seen:
                continue
            seen.add(key)
            if len(s) < 2 or len(t_) < 2:
                continue
            out.append((1 if r % 2 else -1, *sorted((s, t_))))
    out.sort(key=lambda e: (e[1], e[2]))
    return out


def two_block_resolution(a: Iterable[int], b: Iterable[int], n: int) -> NCVector:
    """Resolution of {A / B}; elements of [n] outside A u B stay as singletons."""
    a, b = set(a), set(b)
    if not a or not b or a & b:
        raise ValueError("need disjoint nonempty sets")
    if any(not 1 <= x <= n for x in a | b):
        raise ValueError(f"elements must lie in 1..{n}")
    others = [(x,) for x in range(1, n + 1) if x not in a | b]
    return NCVector(n, {SetPartition(n, [s, t] + others): e for e, s, t in two_block_terms(a, b)})


def _pairs(blocks: Blocks) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if _crossing_blocks(blocks[i], blocks[j])
    ]


def _pick_lex(blocks: Blocks, pairs):
    # blocks are sorted by minimum, so index order is (min A, min B) order
    return pairs[0]


def _pick_most_tangled(blocks: Blocks, pairs):
    degree = [0] * len(blocks)
    for i, j in pairs:
        degree[i] += 1
        degree[j] += 1
    return max(pairs, key=lambda p: (degree[p[0]] + degree[p[1]], p))


POLICIES = {"lex": _pick_lex, "most-tangled": _pick_most_tangled}


def resolve_blocks(blocks: Iterable[Iterable[int]], policy: str = "lex") -> dict[Blocks, int]:
    """Untangle a family of disjoint blocks into noncrossing families with integer coefficients."""
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}; choose from {sorted(POLICIES)}")
    return dict(_resolve_cached(_canon(blocks), policy))


@lru_cache(maxsize=None)
def _resolve_cached(blocks: Blocks, policy: str) -> tuple[tuple[Blocks, int], ...]:
    pairs = _pairs(blocks)
    if not pairs:
        return ((blocks, 1),)
    i, j = POLICIES[policy](blocks, pairs)
    rest = [b for t, b in enumerate(blocks) if t not in (i, j)]
    out: dict = {}
    for e, s, t in two_block_terms(blocks[i], blocks[j]):
        for key, c in _resolve_cached(_canon(rest + [s, t]), policy):
            v = out.get(key, 0) + e * c
            if v:
                out[key] = v
            else:
                del out[key]
    return tuple(out.items())


def resolve_greedy(pi: SetPartition, policy: str = "lex") -> NCVector:
    res = resolve_blocks(pi.blocks, policy)
    return NCVector._raw(pi.n, {SetPartition(pi.n, k): c for k, c in res.items()})


def resolve(pi: SetPartition) -> NCVector:
    """The crossing resolution p(pi); the fast combinatorial route."""
    return resolve_greedy(pi)

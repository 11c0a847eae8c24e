"""Characters of symmetric groups and Schur expansions at small n.

Everything is exact integer arithmetic: the character table comes from the
Murnaghan-Nakayama rule, and a class function is decomposed by character
inner products weighted by class sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from collections import Counter
from typing import Iterable, Mapping, Sequence

import numpy as np

MAX_CHARACTER_N = 10


@dataclass(frozen=True, order=True)
class IntPartition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


def partitions_of(n: int) -> list[IntPartition]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(IntPartition(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


def hook(a: int, b: int) -> IntPartition | None:
    """(a, 1^b), or None when a <= 0 (the hook is not a partition)."""
    if a <= 0 or b < 0:
        return None
    return IntPartition((a,) + (1,) * b)


def flag(a: int, r: int) -> IntPartition | None:
    """(a, a, 1^r); (0, 0) is the empty partition; other shapes with a <= 0 or r < 0 are None."""
    if a == 0 and r == 0:
        return IntPartition(())
    if a <= 0 or r < 0:
        return None
    return IntPartition((a, a) + (1,) * r)


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    lam, mu = list(lam), list(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"partitions of different sizes: {lam}, {mu}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def class_size(mu: Sequence[int]) -> int:
    n = sum(mu)
    z = prod(p for p in mu) * prod(factorial(m) for m in Counter(mu).values())
    return factorial(n) // z


def cycle_type_sign(mu: Sequence[int]) -> int:
    return -1 if sum(p - 1 for p in mu) % 2 else 1


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """chi^lam(mu) by removing border strips of length mu[0] (beta-set form)."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted([x for x in beta if x != b] + [nb], reverse=True)
        shape = tuple(x - (ell - 1 - i) for i, x in enumerate(new))
        shape = tuple(p for p in shape if p > 0)
        total += (-1) ** height * _mn(shape, rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    n: int
    irreps: tuple[IntPartition, ...]
    classes: tuple[IntPartition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def chi(self, lam, mu) -> int:
        return self.values[self.irreps.index(IntPartition(lam))][self.classes.index(IntPartition(mu))]

    def decompose(self, class_function: Sequence) -> dict[IntPartition, int]:
        """Multiplicities of a class function given by its values on ``classes``."""
        order = factorial(self.n)
        out = {}
        for lam, row in zip(self.irreps, self.values):
            s = sum(c * x * v for c, x, v in zip(self.class_sizes, row, class_function))
            if s % order:
                raise ArithmeticError(f"non-integral multiplicity of {lam}: {s}/{order}")
            if s:
                out[lam] = s // order
        return out


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    if not isinstance(n, int) or n < 0 or n > MAX_CHARACTER_N:
        raise ValueError(f"character tables are supported for 0 <= n <= {MAX_CHARACTER_N}")
    parts = tuple(partitions_of(n))
    values = tuple(tuple(_mn(lam.parts, mu.parts) for mu in parts) for lam in parts)
    return CharacterTable(n, parts, parts, values, tuple(class_size(mu.parts) for mu in parts))


@dataclass(frozen=True)
class SymFunc:
    """A Schur expansion sum c_lam s_lam of homogeneous degree n."""

    n: int
    coeffs: Mapping[IntPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in dict(self.coeffs).items():
            lam = lam if isinstance(lam, IntPartition) else IntPartition(lam)
            if lam.size != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def schur(cls, lam: Sequence[int] | IntPartition) -> "SymFunc":
        lam = lam if isinstance(lam, IntPartition) else IntPartition(lam)
        return cls(lam.size, {lam: 1})

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if other.n != self.n:
            raise ValueError(f"degrees {self.n} and {other.n} differ")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.n, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.n, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.n == other.n and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def items(self) -> list[tuple[IntPartition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].parts, reverse=True)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for idx, (lam, c) in enumerate(self.items()):
            body = "s" + str(lam)
            mag = abs(c)
            text = body if mag == 1 else f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            out.append((sign if c < 0 else "") + text if idx == 0 else f"{sign} {text}")
        return " ".join(out)

    def characters(self) -> list[int]:
        table = character_table(self.n)
        vals = [0] * len(table.classes)
        for lam, c in self.coeffs.items():
            row = table.values[table.irreps.index(lam)]
            for j, x in enumerate(row):
                vals[j] += c * x
        return vals


def schur_or_zero(n: int, lam: IntPartition | None) -> SymFunc:
    return SymFunc(n) if lam is None else SymFunc(n, {lam: 1})


def kronecker(a: SymFunc, b: SymFunc) -> SymFunc:
    if a.n != b.n:
        raise ValueError(f"Kronecker product needs equal degrees, got {a.n} and {b.n}")
    table = character_table(a.n)
    vals = [x * y for x, y in zip(a.characters(), b.characters())]
    return SymFunc(a.n, table.decompose(vals))


def _vertical_strips(lam: tuple[int, ...], m: int) -> list[tuple[int, ...]]:
    rows = len(lam) + m
    padded = list(lam) + [0] * m
    out = []
    for chosen in combinations(range(rows), m):
        new = padded[:]
        for r in chosen:
            new[r] += 1
        if all(new[i] >= new[i + 1] for i in range(rows - 1)):
            out.append(tuple(p for p in new if p))
    return out


def pieri_vertical(a: SymFunc, m: int) -> SymFunc:
    """a * s_(1^m), adding vertical strips of size m."""
    if m < 0:
        raise ValueError("strip size must be nonnegative")
    out: dict = {}
    for lam, c in a.coeffs.items():
        for nu in _vertical_strips(lam.parts, m):
            key = IntPartition(nu)
            out[key] = out.get(key, 0) + c
    return SymFunc(a.n + m, out)


# -- representations given by generator matrices ---------------------------------------

def _as_matrix(m) -> np.ndarray:
    arr = np.array(m, dtype=object)
    return arr


def check_coxeter(matrices: Sequence) -> list[str]:
    """Violated Coxeter relations among s_1..s_{n-1}, described as strings (empty when all hold)."""
    mats = [_as_matrix(m) for m in matrices]
    if not mats:
        return []
    dim = mats[0].shape[0]
    eye = np.identity(dim, dtype=object)
    bad = []
    for i, a in enumerate(mats, start=1):
        if not np.array_equal(a.dot(a), eye):
            bad.append(f"s_{i}^2 != e")
        for j in range(i + 1, len(mats) + 1):
            b = mats[j - 1]
            if j == i + 1:
                if not np.array_equal(a.dot(b).dot(a), b.dot(a).dot(b)):
                    bad.append(f"braid s_{i} s_{j}")
            elif not np.array_equal(a.dot(b), b.dot(a)):
                bad.append(f"s_{i} s_{j} != s_{j} s_{i}")
    return bad


def class_representative_word(mu: Sequence[int]) -> list[int]:
    """A word in adjacent transpositions whose product has cycle type mu."""
    word, start = [], 1
    for p in mu:
        word.extend(range(start, start + p - 1))
        start += p
    return word


def frobenius_from_rep(matrices: Sequence, n: int, dim: int | None = None) -> SymFunc:
    """Schur expansion of the representation with s_i acting by ``matrices[i-1]``.

    For n <= 1 there are no generators, so ``dim`` must give the dimension.
    """
    if len(matrices) != max(n - 1, 0):
        raise ValueError(f"need {max(n - 1, 0)} generator matrices for S_{n}, got {len(matrices)}")
    mats = [_as_matrix(m) for m in matrices]
    if mats:
        dim = mats[0].shape[0]
    elif dim is None:
        raise ValueError("dimension is required when there are no generators")
    bad = check_coxeter(mats)
    if bad:
        raise ValueError("matrices violate the Coxeter relations: " + ", ".join(bad))
    table = character_table(n)
    traces = []
    for mu in table.classes:
        acc = np.identity(dim, dtype=object)
        for i in class_representative_word(mu.parts):
            acc = acc.dot(mats[i - 1])
        traces.append(int(np.trace(acc)) if dim else 0)
    mult = table.decompose(traces)
    if any(v < 0 for v in mult.values()):
        raise ArithmeticError("negative multiplicity")
    return SymFunc(n, mult)

"""Exact arithmetic in the exterior algebra on theta_1..theta_n, xi_1..xi_n.

A monomial theta_S * xi_T is stored as one integer bitmask over the 2n
generators in canonical order theta_1 < ... < theta_n < xi_1 < ... < xi_n:
bit ``i-1`` is theta_i and bit ``n+i-1`` is xi_i.  Signs of products and
contractions then reduce to popcounts.

Contraction of a monomial ``g = w_1 ... w_r`` on ``h`` removes ``w_1`` first,
then ``w_2``, and so on, which is the convention making
``<g * f, h> == <f, g . h>`` hold for every ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence, Union

from skeinlab._text import ParseError, tokenize

MAX_N = 16

Coeff = Union[int, Fraction]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"ambient rank must be a nonnegative integer, got {n!r}")
    if n > MAX_N:
        raise ValueError(f"ambient rank {n} exceeds the supported maximum {MAX_N}")


def _norm(c) -> Coeff:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mul_sign(a: int, b: int) -> int:
    """Sign of reordering (a)(b) into canonical order; a & b must be 0."""
    inv = 0
    for p in _bits(b):
        inv += (a >> (p + 1)).bit_count()
    return -1 if inv & 1 else 1


def _contract_mono(g: int, h: int) -> tuple[int, int]:
    """Return (sign, mask) of g . h for monomials g, h; sign 0 when g is not a factor of h."""
    if g & ~h:
        return 0, 0
    sign = 1
    cur = h
    for p in _bits(g):
        if (cur & ((1 << p) - 1)).bit_count() & 1:
            sign = -sign
        cur ^= 1 << p
    return sign, cur


@dataclass(frozen=True, order=False)
class ExtMonomial:
    """theta_S * xi_T in canonical order, as a value."""

    n: int
    theta_set: frozenset
    xi_set: frozenset

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "theta_set", frozenset(self.theta_set))
        object.__setattr__(self, "xi_set", frozenset(self.xi_set))
        for i in self.theta_set | self.xi_set:
            if not 1 <= i <= self.n:
                raise ValueError(f"index {i} outside 1..{self.n}")

    @property
    def key(self) -> int:
        mask = 0
        for i in self.theta_set:
            mask |= 1 << (i - 1)
        for i in self.xi_set:
            mask |= 1 << (self.n + i - 1)
        return mask

    @classmethod
    def from_key(cls, n: int, key: int) -> "ExtMonomial":
        low = (1 << n) - 1
        return cls(
            n,
            frozenset(p + 1 for p in _bits(key & low)),
            frozenset(p + 1 for p in _bits(key >> n)),
        )

    @property
    def bidegree(self) -> tuple[int, int]:
        return len(self.theta_set), len(self.xi_set)

    def sort_key(self):
        return (len(self.theta_set), len(self.xi_set), tuple(sorted(self.theta_set)), tuple(sorted(self.xi_set)))

    def __str__(self) -> str:
        factors = [f"t{i}" for i in sorted(self.theta_set)] + [f"x{i}" for i in sorted(self.xi_set)]
        return " ".join(factors) if factors else "1"


def _key_order(n: int, key: int):
    low = (1 << n) - 1
    t, x = key & low, key >> n
    return (t.bit_count(), x.bit_count(), tuple(_bits(t)), tuple(_bits(x)))


class Fermion:
    """A sparse exact linear combination of canonical monomials.

    Immutable by convention: every operation returns a new instance.
    Coefficients are ints or Fractions, never zero.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, Coeff] | None = None):
        _check_n(n)
        self.n = n
        clean = {}
        if terms:
            limit = 1 << (2 * n)
            for k, c in terms.items():
                if not 0 <= k < limit:
                    raise ValueError(f"monomial key {k} out of range for n={n}")
                if c:
                    clean[k] = _norm(c)
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Fermion":
        # trusted path: terms already normalized with no zero coefficients
        f = cls.__new__(cls)
        f.n = n
        f._terms = terms
        return f

    @classmethod
    def zero(cls, n: int) -> "Fermion":
        _check_n(n)
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "Fermion":
        _check_n(n)
        return cls._raw(n, {0: 1})

    @classmethod
    def monomial(cls, mono: ExtMonomial, coeff: Coeff = 1) -> "Fermion":
        return cls(mono.n, {mono.key: coeff})

    @classmethod
    def from_monomials(cls, n: int, terms: Mapping[ExtMonomial, Coeff]) -> "Fermion":
        out: dict[int, Coeff] = {}
        for mono, c in terms.items():
            if mono.n != n:
                raise ValueError("monomial rank does not match fermion rank")
            out[mono.key] = out.get(mono.key, 0) + c
        return cls(n, out)

    @property
    def terms(self) -> dict[ExtMonomial, Coeff]:
        return {ExtMonomial.from_key(self.n, k): c for k, c in self.items_raw()}

    def items_raw(self) -> list[tuple[int, Coeff]]:
        """(key, coefficient) pairs in the fixed monomial order."""
        return sorted(self._terms.items(), key=lambda kc: _key_order(self.n, kc[0]))

    def items(self) -> list[tuple[ExtMonomial, Coeff]]:
        return [(ExtMonomial.from_key(self.n, k), c) for k, c in self.items_raw()]

    def coeff(self, mono: ExtMonomial) -> Coeff:
        return self._terms.get(mono.key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self.items())

    def _same_rank(self, other: "Fermion") -> None:
        if other.n != self.n:
            raise ValueError(f"ambient rank mismatch: {self.n} vs {other.n}")

    def __eq__(self, other) -> bool:
        if isinstance(other, Fermion):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __add__(self, other: "Fermion") -> "Fermion":
        if not isinstance(other, Fermion):
            return NotImplemented
        self._same_rank(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return Fermion._raw(self.n, out)

    def __neg__(self) -> "Fermion":
        return Fermion._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Fermion") -> "Fermion":
        if not isinstance(other, Fermion):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Fermion":
        if not c:
            return Fermion.zero(self.n)
        c = _norm(c)
        return Fermion._raw(self.n, {k: _norm(v * c) for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Fermion):
            return wedge(self, other)
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def bidegrees(self) -> set[tuple[int, int]]:
        low = (1 << self.n) - 1
        return {((k & low).bit_count(), (k >> self.n).bit_count()) for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len({sum(d) for d in self.bidegrees()}) <= 1

    def __repr__(self) -> str:
        return f"Fermion({self.n}, {format_fermion(self)!r})"

    def __str__(self) -> str:
        return format_fermion(self)


def theta(n: int, i: int) -> Fermion:
    if not 1 <= i <= n:
        raise ValueError(f"theta_{i} outside 1..{n}")
    return Fermion(n, {1 << (i - 1): 1})


def xi(n: int, i: int) -> Fermion:
    if not 1 <= i <= n:
        raise ValueError(f"xi_{i} outside 1..{n}")
    return Fermion(n, {1 << (n + i - 1): 1})


def theta_product(n: int, indices: Iterable[int] | None = None) -> Fermion:
    """theta_{i_1} ... theta_{i_r} for increasing indices (default: all of 1..n)."""
    idx = range(1, n + 1) if indices is None else sorted(indices)
    mask = 0
    for i in idx:
        mask |= 1 << (i - 1)
    return Fermion(n, {mask: 1})


def wedge(f: Fermion, g: Fermion) -> Fermion:
    f._same_rank(g)
    out: dict[int, Coeff] = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            if a & b:
                continue
            k = a | b
            v = out.get(k, 0) + _mul_sign(a, b) * ca * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return Fermion._raw(f.n, {k: _norm(v) for k, v in out.items()})


def contract(g: Fermion, f: Fermion) -> Fermion:
    """g . f, the contraction (exterior differentiation) of f by g."""
    g._same_rank(f)
    out: dict[int, Coeff] = {}
    for a, ca in g._terms.items():
        for b, cb in f._terms.items():
            s, k = _contract_mono(a, b)
            if not s:
                continue
            v = out.get(k, 0) + s * ca * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return Fermion._raw(f.n, {k: _norm(v) for k, v in out.items()})


def inner(f: Fermion, g: Fermion) -> Coeff:
    """Inner product making the monomial basis orthonormal."""
    f._same_rank(g)
    if len(f._terms) > len(g._terms):
        f, g = g, f
    total = 0
    for k, c in f._terms.items():
        d = g._terms.get(k)
        if d:
            total += c * d
    return _norm(total)


def _check_perm(w: Sequence[int], n: int) -> tuple[int, ...]:
    w = tuple(w)
    if len(w) != n or sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{n}")
    return w


def _perm_sign(seq: Sequence[int]) -> int:
    seen = [False] * len(seq)
    sign = 1
    pos = {v: i for i, v in enumerate(sorted(seq))}
    for start in range(len(seq)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = pos[seq[j]]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def act(w: Sequence[int], f: Fermion) -> Fermion:
    """Diagonal action w.theta_i = theta_{w(i)}, w.xi_i = xi_{w(i)}; w is one-line notation."""
    n = f.n
    w = _check_perm(w, n)
    # position map on the 2n-letter alphabet
    pmap = [w[p] - 1 for p in range(n)] + [n + w[p] - 1 for p in range(n)]
    out: dict[int, Coeff] = {}
    for k, c in f._terms.items():
        images = [pmap[p] for p in _bits(k)]
        key = 0
        for q in images:
            key |= 1 << q
        out[key] = _perm_sign(images) * c
    return Fermion._raw(n, out)


def bidegree_component(f: Fermion, d: tuple[int, int]) -> Fermion:
    i, j = d
    low = (1 << f.n) - 1
    return Fermion._raw(
        f.n,
        {k: c for k, c in f._terms.items() if (k & low).bit_count() == i and (k >> f.n).bit_count() == j},
    )


def _generator_bit(n: int, gen) -> int:
    if isinstance(gen, Fermion):
        if len(gen._terms) != 1:
            raise ValueError("expected a single generator")
        (k, c), = gen._terms.items()
        if c != 1 or k.bit_count() != 1:
            raise ValueError("expected a single generator")
        return k
    if isinstance(gen, str):
        kind, idx = gen[0], int(gen[1:])
        if kind not in "tx" or not 1 <= idx <= n:
            raise ValueError(f"bad generator name {gen!r}")
        return 1 << (idx - 1 + (n if kind == "x" else 0))
    raise TypeError(f"cannot interpret {gen!r} as a generator")


def substitute_zero(f: Fermion, gen) -> Fermion:
    """Set one generator (a Fermion like ``xi(n, 3)`` or a name like ``"x3"``) to zero."""
    bit = _generator_bit(f.n, gen)
    return Fermion._raw(f.n, {k: c for k, c in f._terms.items() if not k & bit})


def embed(f: Fermion, n: int) -> Fermion:
    """View f in a larger ambient rank n, keeping generator indices."""
    if n < f.n:
        raise ValueError("can only embed into a rank at least as large")
    low = (1 << f.n) - 1
    return Fermion._raw(n, {(k & low) | ((k >> f.n) << n): c for k, c in f._terms.items()})


def restrict(f: Fermion, n: int) -> Fermion:
    """Inverse of ``embed``; every monomial must avoid indices above n."""
    out = {}
    low_big = (1 << f.n) - 1
    low = (1 << n) - 1
    for k, c in f._terms.items():
        t, x = k & low_big, k >> f.n
        if t & ~low or x & ~low:
            raise ValueError(f"monomial uses an index above {n}")
        out[t | (x << n)] = c
    return Fermion._raw(n, out)


def monomials_of_bidegree(n: int, i: int, j: int) -> list[ExtMonomial]:
    from itertools import combinations

    return [
        ExtMonomial(n, frozenset(s), frozenset(t))
        for s in combinations(range(1, n + 1), i)
        for t in combinations(range(1, n + 1), j)
    ]


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return permutations(range(1, n + 1))


# -- text format ------------------------------------------------------------

def _format_coeff(c: Coeff) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def format_fermion(f: Fermion) -> str:
    """Deterministic signed sum, e.g. ``3/2*t1 t3 x2 - x1``."""
    if not f._terms:
        return "0"
    parts = []
    for idx, (mono, c) in enumerate(f.items()):
        neg = c < 0
        mag = -c if neg else c
        body = str(mono)
        if body == "1":
            text = _format_coeff(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_format_coeff(mag)}*{body}"
        if idx == 0:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)


_FERMION_TOKENS = [
    ("gen", r"[tx]\d+"),
    ("num", r"\d+(?:/\d+)?"),
    ("op", r"[-+*]"),
]


def parse_fermion(text: str, n: int | None = None) -> Fermion:
    """Parse the signed-sum format; factors may come in any order and are re-sorted with sign.

    When ``n`` is omitted it is taken to be the largest index mentioned.
    """
    tokens = tokenize(text, _FERMION_TOKENS, "a number, a generator like t1/x2, or one of + - *")
    if n is None:
        idx = [int(t.value[1:]) for t in tokens if t.kind == "gen"]
        n = max(idx, default=0)
    _check_n(n)
    terms: list[tuple[Coeff, list[int]]] = []
    pos = 0
    end = len(text)

    def at(i):
        return tokens[i] if i < len(tokens) else None

    if not tokens:
        raise ParseError(text, 0, "a term")
    sign = 1
    tok = at(pos)
    if tok.kind == "op" and tok.value in "+-":
        sign = -1 if tok.value == "-" else 1
        pos += 1
    while True:
        tok = at(pos)
        if tok is None:
            raise ParseError(text, end, "a term")
        coeff: Coeff = 1
        gens: list[int] = []
        if tok.kind == "num":
            coeff = _norm(Fraction(tok.value))
            pos += 1
            tok = at(pos)
            if tok is not None and tok.kind == "op" and tok.value == "*":
                pos += 1
                tok = at(pos)
                if tok is None or tok.kind != "gen":
                    raise ParseError(text, tok.pos if tok else end, "a generator after '*'")
        elif tok.kind != "gen":
            raise ParseError(text, tok.pos, "a number or generator")
        while tok is not None and tok.kind == "gen":
            i = int(tok.value[1:])
            if not 1 <= i <= n:
                raise ParseError(text, tok.pos, f"a generator index in 1..{n}")
            gens.append((i - 1) + (n if tok.value[0] == "x" else 0))
            pos += 1
            tok = at(pos)
        terms.append((sign * coeff, gens))
        if tok is None:
            break
        if tok.kind == "op" and tok.value in "+-":
            sign = -1 if tok.value == "-" else 1
            pos += 1
            continue
        raise ParseError(text, tok.pos, "'+' or '-' between terms")

    total = Fermion.zero(n)
    for coeff, gens in terms:
        if len(set(gens)) != len(gens):
            continue
        key = 0
        for p in gens:
            key |= 1 << p
        total = total + Fermion._raw(n, {key: _norm(_perm_sign(gens) * coeff)})
    return total

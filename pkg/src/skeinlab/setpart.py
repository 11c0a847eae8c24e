"""Set partitions, noncrossing partitions, segmented permutations.

Partitions are kept in canonical form: each block ascending, blocks ordered by
their minimum.  Permutations are one-line tuples ``w`` with ``w[i-1] == w(i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from skeinlab._text import ParseError, tokenize

MAX_N = 16

Block = tuple[int, ...]


@dataclass(frozen=True)
class SetPartition:
    """A set partition of {1..n} in canonical form."""

    n: int
    blocks: tuple[Block, ...]

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        if not isinstance(n, int) or n < 0 or n > MAX_N:
            raise ValueError(f"ground-set size must be in 0..{MAX_N}, got {n!r}")
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0))
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValueError("blocks must be nonempty")
            for x in b:
                if not 1 <= x <= n:
                    raise ValueError(f"element {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise ValueError(f"blocks do not cover 1..{n}; missing {missing}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def singletons(self) -> int:
        return sum(1 for b in self.blocks if len(b) == 1)

    def block_of(self, x: int) -> Block:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def same_block(self, a: int, b: int) -> bool:
        return b in self.block_of(a)

    def sort_key(self):
        return (self.k, self.singletons, self.blocks)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"SetPartition({self.n}, {format_partition(self)!r})"


@dataclass(frozen=True)
class SegmentedPermutation:
    """A permutation in one-line notation cut into consecutive segments of sizes ``alpha``."""

    w: tuple[int, ...]
    alpha: tuple[int, ...]

    def __post_init__(self):
        w, alpha = tuple(self.w), tuple(self.alpha)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "alpha", alpha)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w!r} is not a permutation")
        if any(a <= 0 for a in alpha) or sum(alpha) != len(w):
            raise ValueError(f"{alpha!r} is not a composition of {len(w)}")

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def k(self) -> int:
        return len(self.alpha)

    def segments(self) -> list[tuple[int, ...]]:
        out, start = [], 0
        for a in self.alpha:
            out.append(self.w[start:start + a])
            start += a
        return out

    def __str__(self) -> str:
        return "·".join("".join(map(str, s)) if self.n < 10 else ",".join(map(str, s)) for s in self.segments())


# -- predicates ---------------------------------------------------------------

def _crossing_blocks(a: Sequence[int], b: Sequence[int]) -> bool:
    """Do two disjoint blocks cross, i.e. is {a / b} restricted to a u b crossing?"""
    # walk the merged order and count label changes; noncrossing iff at most 2 runs cyclically
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    changes = sum(1 for i in range(len(merged)) if merged[i][1] != merged[i - 1][1])
    return changes > 2


def blocks_cross(a: Iterable[int], b: Iterable[int]) -> bool:
    return _crossing_blocks(tuple(a), tuple(b))


def is_noncrossing(pi: SetPartition) -> bool:
    return _blocks_noncrossing(pi.blocks)


def _blocks_noncrossing(blocks: Sequence[Block]) -> bool:
    # a < b < c < d with a~c, b~d in different blocks; pairwise block test suffices
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if _crossing_blocks(blocks[i], blocks[j]):
                return False
    return True


def crossing_pairs(pi: SetPartition) -> list[tuple[int, int]]:
    """Index pairs (i, j), i < j, of blocks of ``pi`` that cross."""
    bl = pi.blocks
    return [
        (i, j)
        for i in range(len(bl))
        for j in range(i + 1, len(bl))
        if _crossing_blocks(bl[i], bl[j])
    ]


def tangle(pi: SetPartition) -> int:
    return len(crossing_pairs(pi))


# -- enumeration ----------------------------------------------------------------

def _rgs(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n in lexicographic order."""
    if n == 0:
        yield []
        return
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield a
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, max(mx, v))

    a[0] = 0
    yield from rec(1, 0)


def _from_rgs(a: Sequence[int]) -> SetPartition:
    blocks: dict[int, list[int]] = {}
    for i, v in enumerate(a, start=1):
        blocks.setdefault(v, []).append(i)
    return SetPartition(len(a), blocks.values())


def enumerate_partitions(
    n: int,
    k: int | None = None,
    m: int | None = None,
    noncrossing_only: bool = False,
) -> list[SetPartition]:
    """Pi(n), Pi(n,k), Pi(n,k,m) or their noncrossing subfamilies, in RGS-lexicographic order."""
    if not isinstance(n, int) or n < 0 or n > MAX_N:
        raise ValueError(f"n must be in 0..{MAX_N}")
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if m is not None:
        if k is None:
            raise ValueError("m requires k")
        if not 0 <= m <= k:
            raise ValueError(f"need 0 <= m <= k, got m={m}, k={k}")
    return list(_enumerate_cached(n, k, m, noncrossing_only))


@lru_cache(maxsize=None)
def _enumerate_cached(n, k, m, noncrossing_only) -> tuple[SetPartition, ...]:
    out = []
    for a in _rgs(n):
        if k is not None and (max(a, default=-1) + 1) != k:
            continue
        pi = _from_rgs(a)
        if m is not None and pi.singletons != m:
            continue
        if noncrossing_only and not is_noncrossing(pi):
            continue
        out.append(pi)
    return tuple(out)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return comb(n, k) * comb(n, k - 1) // n


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


# -- permutations -----------------------------------------------------------------

def check_perm(w: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    w = tuple(w)
    size = len(w) if n is None else n
    if len(w) != size or sorted(w) != list(range(1, size + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{size}")
    return w


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def transposition(n: int, i: int) -> tuple[int, ...]:
    """The adjacent transposition s_i = (i, i+1)."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} undefined for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """(v o w)(x) = v(w(x))."""
    return tuple(v[x - 1] for x in w)


def inverse(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        inv[x - 1] = i
    return tuple(inv)


def sign(w: Sequence[int]) -> int:
    inv = sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])
    return -1 if inv % 2 else 1


def cycle_type(w: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(w)
    lengths = []
    for s in range(len(w)):
        if seen[s]:
            continue
        j, length = s, 0
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def apply_perm(w: Sequence[int], pi: SetPartition) -> SetPartition:
    """The partition with blocks w(B)."""
    if len(w) != pi.n:
        raise ValueError(f"permutation of size {len(w)} applied to partition of [{pi.n}]")
    return SetPartition(pi.n, ([w[x - 1] for x in b] for b in pi.blocks))


# -- segmented permutations ---------------------------------------------------------

def to_partition(sp: SegmentedPermutation) -> SetPartition:
    return SetPartition(sp.n, sp.segments())


def odd_part_sum(alpha: Sequence[int]) -> int:
    """alpha_1 + alpha_3 + ... (parts at odd positions, 1-based)."""
    return sum(alpha[0::2])


def canonical_segperm(pi: SetPartition) -> SegmentedPermutation:
    w = tuple(x for b in pi.blocks for x in b)
    return SegmentedPermutation(w, tuple(len(b) for b in pi.blocks))


# -- cyclic intervals ------------------------------------------------------------------

def cyclic_decomposition(a: Iterable[int], b: Iterable[int], n: int | None = None) -> list[Block]:
    """Maximal cyclic intervals (A_1, B_1, ..., A_m, B_m) of the ordered set A u B.

    A_1 is the interval of A holding min(A u B) when that minimum is in A;
    otherwise the sequence starts at the A-interval after the B-interval holding it.
    """
    a, b = frozenset(a), frozenset(b)
    if not a or not b:
        raise ValueError("both sets must be nonempty")
    if a & b:
        raise ValueError("sets must be disjoint")
    if n is not None and any(not 1 <= x <= n for x in a | b):
        raise ValueError(f"elements must lie in 1..{n}")
    order = sorted(a | b)
    labels = [x in a for x in order]
    size = len(order)
    # start at a label change so no run wraps in the rotated sequence
    p = next(i for i in range(size) if labels[i] != labels[i - 1])
    runs: list[list[int]] = []
    run_labels: list[bool] = []
    for t in range(size):
        idx = (p + t) % size
        if run_labels and run_labels[-1] == labels[idx]:
            runs[-1].append(order[idx])
        else:
            runs.append([order[idx]])
            run_labels.append(labels[idx])
    holder = next(r for r in range(len(runs)) if order[0] in runs[r])
    start = holder if run_labels[holder] else (holder + 1) % len(runs)
    runs = runs[start:] + runs[:start]
    return [tuple(sorted(r)) for r in runs]


# -- text formats -------------------------------------------------------------------

_PARTITION_TOKENS = [("num", r"\d+"), ("sep", r"[/]"), ("comma", r","), ("brace", r"[{}]")]


def parse_partition(text: str, n: int | None = None) -> SetPartition:
    """Parse ``"1 3 5 / 2 4 / 6"``; commas and surrounding braces are accepted."""
    tokens = tokenize(text, _PARTITION_TOKENS, "an integer, '/', ',' or a brace")
    if tokens and tokens[0].kind == "brace":
        if tokens[0].value != "{" or tokens[-1].kind != "brace" or tokens[-1].value != "}" or len(tokens) < 2:
            raise ParseError(text, tokens[0].pos if tokens[0].value != "{" else len(text), "matching braces")
        tokens = tokens[1:-1]
    blocks: list[list[int]] = [[]]
    last = None
    for tok in tokens:
        if tok.kind == "num":
            blocks[-1].append(int(tok.value))
        elif tok.kind == "sep":
            if not blocks[-1]:
                raise ParseError(text, tok.pos, "an element before '/'")
            blocks.append([])
        elif tok.kind == "comma":
            if last is None or last.kind != "num":
                raise ParseError(text, tok.pos, "an element before ','")
        else:
            raise ParseError(text, tok.pos, "an element or '/'")
        last = tok
    if not blocks[-1]:
        raise ParseError(text, len(text), "an element")
    elems = [x for blk in blocks for x in blk]
    size = n if n is not None else max(elems)
    try:
        return SetPartition(size, blocks)
    except ValueError as exc:
        raise ValueError(f"invalid partition {text!r}: {exc}") from None


def format_partition(pi: SetPartition) -> str:
    return " / ".join(" ".join(map(str, b)) for b in pi.blocks)


_PERM_TOKENS = [("num", r"\d+"), ("arrow", r"->"), ("comma", r",")]


def parse_permutation(text: str) -> tuple[int, ...]:
    """One-line images ``"2 3 1"`` or a two-line ``"1 2 3 -> 2 3 1"``."""
    tokens = tokenize(text, _PERM_TOKENS, "an integer or '->'")
    arrows = [t for t in tokens if t.kind == "arrow"]
    nums = [t for t in tokens if t.kind != "comma"]
    if len(arrows) > 1:
        raise ParseError(text, arrows[1].pos, "at most one '->'")
    if arrows:
        cut = nums.index(arrows[0])
        top = [int(t.value) for t in nums[:cut]]
        bottom = [int(t.value) for t in nums[cut + 1:]]
        if not top:
            raise ParseError(text, arrows[0].pos, "domain values before '->'")
        if len(top) != len(bottom):
            raise ParseError(text, len(text), f"{len(top)} image values after '->'")
        if sorted(top) != list(range(1, len(top) + 1)):
            raise ValueError(f"domain {top} is not 1..{len(top)} in some order")
        w = [0] * len(top)
        for x, y in zip(top, bottom):
            w[x - 1] = y
        return check_perm(w)
    if not nums:
        raise ParseError(text, 0, "a permutation")
    return check_perm([int(t.value) for t in nums])


def format_permutation(w: Sequence[int]) -> str:
    return " ".join(map(str, w))

"""Exact sparse row reduction over the integers.

Rows are dicts ``{column: int}``.  Elimination is fraction-free: each step
replaces ``r`` by ``p[c]*r - r[c]*p`` and divides out the gcd content, so
entries stay integral and small.  Rational input rows are cleared of
denominators first; rank and solvability are unaffected.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping

Row = dict


def integral_row(row: Mapping) -> dict:
    """Scale a row with rational entries to a primitive integer row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {k: int(v * den) for k, v in row.items() if v}
    return _primitive(out)[0]


def _content(row: Mapping) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _primitive(row: dict) -> tuple[dict, int]:
    g = _content(row)
    if g > 1:
        return {k: v // g for k, v in row.items()}, g
    return row, 1


def _combine(a: int, r: Mapping, b: int, p: Mapping) -> dict:
    """a*r - b*p with zero entries dropped."""
    out = {k: a * v for k, v in r.items()}
    for k, v in p.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


class EchelonBasis:
    """Incrementally grown echelon form; optionally tracks each row as a combination of inputs.

    Pivot rows are keyed by their leading (smallest) column, so reducing a
    vector repeatedly clears its leading entry until it vanishes or opens a
    new pivot.  With ``track=True`` every stored row carries the integer
    combination of input labels it equals, which lets ``solve`` express a
    target in terms of the original inputs.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self._pivots: dict = {}
        self._combos: dict = {}
        self.labels: list = []

    def copy(self) -> "EchelonBasis":
        """Independent copy; stored rows are never mutated, so they can be shared."""
        other = EchelonBasis(self.track)
        other._pivots = dict(self._pivots)
        other._combos = dict(self._combos)
        other.labels = list(self.labels)
        return other

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _reduce(self, row: dict, combo: dict | None, scale: int):
        # scale tracks the multiplier on the original vector
        while row:
            c = min(row)
            p = self._pivots.get(c)
            if p is None:
                return row, combo, scale, c
            a, b = p[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            row = _combine(a, row, b, p)
            scale *= a
            if combo is not None:
                combo = _combine(a, combo, b, self._combos[c])
            if row:
                g = _content(row)
                if combo is not None:
                    g = gcd(g, gcd(_content(combo), scale)) if combo else gcd(g, scale)
                if g > 1:
                    row = {k: v // g for k, v in row.items()}
                    scale //= g
                    if combo is not None:
                        combo = {k: v // g for k, v in combo.items()}
        return row, combo, scale, None

    def add(self, row: Mapping, label: Hashable = None) -> bool:
        """Insert a row; returns True when it increases the rank."""
        if self.track:
            den = 1
            for v in row.values():
                if isinstance(v, Fraction):
                    den = lcm(den, v.denominator)
            row = {k: int(v * den) for k, v in row.items() if v}
            combo = {len(self.labels): den}
        else:
            row, combo = integral_row(row), None
        self.labels.append(label)
        # scale is meaningless here; 0 keeps it out of the gcd normalization
        row, combo, _, c = self._reduce(row, combo, 0)
        if not row:
            return False
        self._pivots[c] = row
        if self.track:
            self._combos[c] = combo
        return True

    def contains(self, row: Mapping) -> bool:
        row, _, _, _ = self._reduce(integral_row(row), None, 1)
        return not row

    def solve(self, target: Mapping) -> dict | None:
        """Coefficients ``{label: Fraction|int}`` with target = sum coeff*input, or None if outside the span."""
        if not self.track:
            raise ValueError("solve needs a basis built with track=True")
        den = 1
        for v in target.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        row = {k: int(v * den) for k, v in target.items() if v}
        # invariant: scale*target + sum(combo_i * input_i) == row
        row, combo, scale, _ = self._reduce(row, {}, 1)
        if row:
            return None
        out = {}
        for idx, v in combo.items():
            q = Fraction(-v, scale * den)
            if q:
                out[self.labels[idx]] = q.numerator if q.denominator == 1 else q
        return out


def rank(rows: Iterable[Mapping]) -> int:
    basis = EchelonBasis()
    for r in rows:
        basis.add(r)
    return basis.rank


class OnceCache:
    """A dict-like cache whose entries are built exactly once, even under concurrent readers."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key, build):
        try:
            return self._data[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._data:
                self._data[key] = build()
            return self._data[key]

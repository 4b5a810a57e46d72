"""Permutations of {0..n-1} as immutable image arrays.

Composition is "left then right": ``compose(p, q)`` maps i to q(p(i)).
Points are 0-indexed everywhere in memory; cycle notation at the text
boundary is 1-indexed, matching the convention of printed generator
tables.
"""
from __future__ import annotations

import math
import re

import numpy as np

from .errors import InputError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An immutable permutation given by its image array."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        arr = np.asarray(images, dtype=np.int64)
        if arr.ndim != 1:
            raise InputError("images must be a flat sequence")
        n = arr.shape[0]
        seen = np.zeros(n, dtype=bool)
        if n and (arr.min() < 0 or arr.max() >= n):
            raise InputError("image out of range; not a permutation")
        seen[arr] = True
        if not seen.all():
            raise InputError("images are not a bijection")
        self.images = arr
        self.images.setflags(write=False)
        self._hash = None

    @classmethod
    def _wrap(cls, arr):
        """Wrap a trusted image array without re-validating."""
        p = object.__new__(cls)
        arr.setflags(write=False)
        object.__setattr__(p, "images", arr)
        object.__setattr__(p, "_hash", None)
        return p

    @property
    def degree(self):
        return int(self.images.shape[0])

    def __call__(self, point):
        return int(self.images[point])

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images.shape == other.images.shape and bool(
            np.array_equal(self.images, other.images)
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.images.tobytes()))
        return self._hash

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, k):
        return power(self, k)

    def is_identity(self):
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def moved_points(self):
        return [int(i) for i in np.flatnonzero(self.images != np.arange(self.degree))]

    def smallest_moved(self):
        diff = np.flatnonzero(self.images != np.arange(self.degree))
        return int(diff[0]) if diff.size else None

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its smallest point."""
        n = self.degree
        seen = [False] * n
        out = []
        for i in range(n):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = int(self.images[i])
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = int(self.images[j])
            out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def identity(degree):
    return Permutation._wrap(np.arange(degree, dtype=np.int64))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation mapping i to q(p(i))."""
    if p.degree != q.degree:
        raise InputError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation._wrap(q.images[p.images])


def inverse(p: Permutation) -> Permutation:
    inv = np.empty(p.degree, dtype=np.int64)
    inv[p.images] = np.arange(p.degree)
    return Permutation._wrap(inv)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = np.arange(p.degree, dtype=np.int64)
    base = p.images
    while k:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return Permutation._wrap(result)


def from_cycles(cycles, degree):
    """Build a permutation from 0-indexed cycles."""
    images = np.arange(degree, dtype=np.int64)
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        if cyc:
            images[cyc[-1]] = cyc[0]
    return Permutation(images)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-indexed cycle notation like ``(1,2,3)(4,5)`` or ``()``."""
    stripped = text.replace(" ", "")
    if stripped in ("", "()"):
        return identity(degree)
    if not re.fullmatch(r"(\([^()]*\))+", stripped):
        raise InputError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        try:
            pts = [int(tok) - 1 for tok in body.split(",")]
        except ValueError:
            raise InputError(f"malformed cycle notation: {text!r}") from None
        if any(p < 0 or p >= degree for p in pts):
            raise InputError(f"cycle point out of range 1..{degree}: {text!r}")
        if len(set(pts)) != len(pts):
            raise InputError(f"repeated point in cycle: {text!r}")
        cycles.append(pts)
    flat = [p for c in cycles for p in c]
    if len(set(flat)) != len(flat):
        raise InputError(f"cycles are not disjoint: {text!r}")
    return from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    """1-indexed cycle notation, cycles sorted by smallest point."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in cyc) + ")" for cyc in cycles)

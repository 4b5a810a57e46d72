"""Transitive group actions: coset actions, primitivity, subdegrees.

A coset action is labelled by canonical coset representatives.  The
canonical representative of Hg is the element of Hg whose image tuple
is lexicographically minimal; it is found by descending a stabilizer
chain of H whose base is forced to the natural point order, so equality
of representative image tuples is equality of cosets.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bsgs import StabilizerChain, bsgs_build, orbit_transversal
from .errors import InputError, ResourceLimitError
from .perm import Permutation, compose, inverse

COSET_INDEX_LIMIT = 100_000


@dataclass
class GroupAction:
    """A named generating set acting on {0..degree-1}."""

    name: str
    degree: int
    generators: list[Permutation]
    order: int
    _hom: object = field(default=None, repr=False, compare=False)
    _chain: StabilizerChain = field(default=None, repr=False, compare=False)

    @classmethod
    def natural(cls, name, gens, degree=None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise InputError("empty generator list needs an explicit degree")
            degree = gens[0].degree
        chain = bsgs_build(gens, degree)
        return cls(name, degree, gens, chain.order(), _hom=None, _chain=chain)

    @property
    def chain(self):
        if self._chain is None:
            self._chain = bsgs_build(self.generators, self.degree)
        return self._chain

    def image_of(self, g: Permutation) -> Permutation:
        """Image of a source-group element under this action."""
        if self._hom is not None:
            return self._hom(g)
        if g.degree != self.degree:
            raise InputError("no homomorphism data and degrees differ")
        return g


@dataclass
class SubdegreeProfile:
    """Multiset of point-stabilizer orbit lengths."""

    entries: list[tuple[int, int]]  # (length, multiplicity), ascending

    def total(self):
        return sum(l * m for l, m in self.entries)

    def lengths(self):
        return [l for l, _ in self.entries for _ in range(_)] if False else [
            l for l, m in self.entries for _ in range(m)]

    def __str__(self):
        return " ".join(f"{l}^{m}" for l, m in self.entries)

    @classmethod
    def parse(cls, text):
        entries = []
        for tok in text.split():
            l, m = tok.split("^")
            entries.append((int(l), int(m)))
        return cls(entries)


def _natural_base_chain(gens, degree):
    return bsgs_build(gens, degree, base_hint=range(degree))


def _canonical_rep(hchain, images):
    """Minimal image-tuple representative of the coset H * (permutation
    with the given images)."""
    u = images
    for lvl in hchain.levels:
        if len(lvl.orbit) == 1:
            continue
        x_star = min(lvl.orbit, key=lambda x: u[x])
        if x_star != lvl.point:
            u = u[lvl.transversal[x_star].images]
    return u


def coset_action(G: StabilizerChain, H_gens, name="coset action",
                 limit=COSET_INDEX_LIMIT) -> GroupAction:
    """Action of G on the right cosets of H = <H_gens>; point 0 is H."""
    H_gens = list(H_gens)
    for h in H_gens:
        if h not in G:
            raise InputError("H is not a subgroup of G: generator outside G")
    degree = G.degree
    hchain = _natural_base_chain(H_gens, degree)
    index = G.order() // hchain.order()
    if index > limit:
        raise ResourceLimitError(f"coset index {index} exceeds limit {limit}")

    gens = G.strong_generators()
    ident = np.arange(degree, dtype=np.int64)
    reps = [_canonical_rep(hchain, ident)]
    keys = {reps[0].tobytes(): 0}
    images = [[] for _ in gens]
    q = 0
    while q < len(reps):
        r = reps[q]
        q += 1
        for gi, g in enumerate(gens):
            canon = _canonical_rep(hchain, g.images[r])
            key = canon.tobytes()
            if key not in keys:
                keys[key] = len(reps)
                reps.append(canon)
            images[gi].append(keys[key])
    if len(reps) != index:
        raise AssertionError("coset enumeration does not match the index")

    def hom(g, _reps=reps, _keys=keys, _hchain=hchain):
        if g not in G:
            raise InputError("element outside G has no image")
        return Permutation([_keys[_canonical_rep(_hchain, g.images[r]).tobytes()]
                            for r in _reps])

    action_gens = [Permutation(img) for img in images]
    order = bsgs_build(action_gens, index).order() if index > 1 else 1
    act = GroupAction(name, index, action_gens, order, _hom=hom)
    return act


def is_transitive(A: GroupAction) -> bool:
    if A.degree < 1:
        raise InputError("degree must be at least 1")
    from .bsgs import orbit
    return len(orbit(A.generators, 0, A.degree)) == A.degree


def _minimal_block_size(gens, n, beta):
    """Size of the smallest block containing {0, beta} (union-find join)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return None
        parent[rb] = ra
        return (ra, rb)

    stack = [(0, beta)]
    union(0, beta)
    images = [g.images for g in gens]
    while stack:
        a, b = stack.pop()
        for img in images:
            merged = union(int(img[a]), int(img[b]))
            if merged:
                stack.append(merged)
    root = find(0)
    return sum(1 for x in range(n) if find(x) == root)


def is_primitive(A: GroupAction) -> bool:
    """No nontrivial proper block system; minimal-block test from each pair."""
    if A.degree < 2:
        raise InputError("primitivity needs degree >= 2")
    if not is_transitive(A):
        raise InputError("primitivity is defined for transitive actions only")
    for beta in range(1, A.degree):
        if _minimal_block_size(A.generators, A.degree, beta) < A.degree:
            return False
    return True


def point_stabilizer_gens(A: GroupAction, point: int):
    """Reduced Schreier generators of the stabilizer of a point of A."""
    pts, transversal = orbit_transversal(A.generators, point, A.degree)
    if len(pts) != A.degree:
        raise InputError("action is not transitive")
    target = A.order // A.degree
    if target == 1:
        return []
    out = []
    sub = None
    for x in pts:
        ux = transversal[x]
        for g in A.generators:
            y = g(x)
            s = compose(compose(ux, g), inverse(transversal[y]))
            if s.is_identity() or (sub is not None and s in sub):
                continue
            out.append(s)
            sub = bsgs_build(out, A.degree)
            if sub.order() == target:
                return out
    raise AssertionError("orbit-stabilizer accounting failed")


def subdegrees(A: GroupAction, base_point: int = 0) -> SubdegreeProfile:
    """Orbit lengths of the stabilizer of base_point, with multiplicities."""
    if not is_transitive(A):
        raise InputError("subdegrees are defined for transitive actions only")
    stab = point_stabilizer_gens(A, base_point)
    images = [g.images for g in stab]
    seen = [False] * A.degree
    counts = {}
    for p in range(A.degree):
        if seen[p]:
            continue
        orb = [p]
        seen[p] = True
        q = 0
        while q < len(orb):
            x = orb[q]
            q += 1
            for img in images:
                y = int(img[x])
                if not seen[y]:
                    seen[y] = True
                    orb.append(y)
        counts[len(orb)] = counts.get(len(orb), 0) + 1
    return SubdegreeProfile(sorted(counts.items()))

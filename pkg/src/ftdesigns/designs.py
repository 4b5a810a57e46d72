"""Incidence structures and 2-design machinery.

Verification is exhaustive counting: block sizes, per-point replication,
and per-pair coverage are all tallied directly, never inferred from the
arithmetic identities.  The identities are checked afterwards against
the counted values.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .actions import GroupAction, point_stabilizer_gens
from .bsgs import StabilizerChain, bsgs_build, orbit
from .errors import DesignError, InputError, ResourceLimitError

BLOCK_ORBIT_LIMIT = 2_000_000
SUBSET_ENUM_LIMIT = 1_000_000


@dataclass(frozen=True)
class ParameterSet:
    """(v, b, r, k, lambda) with the standard feasibility identities."""

    v: int
    b: int
    r: int
    k: int
    lam: int

    def check_identities(self):
        """The five feasibility conditions; raises on the first failure."""
        v, b, r, k, lam = self.v, self.b, self.r, self.k, self.lam
        if r * (k - 1) != lam * (v - 1):
            raise InputError(f"{self}: r(k-1) != lambda(v-1)")
        if v * r != b * k:
            raise InputError(f"{self}: vr != bk")
        if lam * v >= r * r:
            raise InputError(f"{self}: lambda*v >= r^2")
        if not (2 < k < v - 1):
            raise InputError(f"{self}: trivial (k outside 2..v-2)")

    def is_nonsymmetric(self):
        return self.v < self.b

    def astuple(self):
        return (self.v, self.b, self.r, self.k, self.lam)

    def __str__(self):
        return f"({self.v}, {self.b}, {self.r}, {self.k}, {self.lam})"


@dataclass
class Design:
    """Point count plus a lexicographically sorted list of sorted blocks."""

    v: int
    blocks: list[tuple[int, ...]]

    def __post_init__(self):
        self.blocks = sorted(tuple(sorted(b)) for b in self.blocks)
        for b in self.blocks:
            if b and (b[0] < 0 or b[-1] >= self.v):
                raise InputError(f"block {b} outside point range 0..{self.v - 1}")

    def block_set(self):
        return set(self.blocks)


@dataclass
class FlagReport:
    flag_transitive: bool
    r_witness: int
    orbit_counts: list[int]


def verify_2design(design: Design) -> ParameterSet:
    """Exhaustively verify the 2-design axioms and return the counted
    parameters.  Raises DesignError with a witness on any failure."""
    v, blocks = design.v, design.blocks
    if v < 3 or not blocks:
        raise InputError("need v >= 3 and at least one block")
    if len(set(blocks)) != len(blocks):
        dup = next(b for i, b in enumerate(blocks) if b in blocks[:i])
        raise DesignError(f"repeated block {dup}", witness=dup)
    k = len(blocks[0])
    for b in blocks:
        if len(b) != k:
            raise DesignError(
                f"not k-uniform: block sizes {k} and {len(b)}",
                witness=(blocks[0], b))
    r_count = [0] * v
    pair_count = {}
    for b in blocks:
        for x in b:
            r_count[x] += 1
        for pr in combinations(b, 2):
            pair_count[pr] = pair_count.get(pr, 0) + 1
    r = r_count[0]
    for x, rx in enumerate(r_count):
        if rx != r:
            raise DesignError(
                f"replication not constant: r({0})={r}, r({x})={rx}",
                witness=(0, x))
    if len(pair_count) != v * (v - 1) // 2:
        missing = next(pr for pr in combinations(range(v), 2) if pr not in pair_count)
        raise DesignError(f"pair {missing} lies in no block", witness=missing)
    lam_values = set(pair_count.values())
    if len(lam_values) != 1:
        lam0 = pair_count[(0, 1)] if (0, 1) in pair_count else None
        bad = next(pr for pr, c in pair_count.items() if c != lam0)
        raise DesignError(
            f"pair coverage not constant: {bad} lies in {pair_count[bad]} blocks",
            witness=bad)
    params = ParameterSet(v, len(blocks), r, k, lam_values.pop())
    # counted values must satisfy the arithmetic identities
    if params.r * (params.k - 1) != params.lam * (params.v - 1):
        raise DesignError(f"counted parameters violate r(k-1)=lambda(v-1): {params}")
    if params.v * params.r != params.b * params.k:
        raise DesignError(f"counted parameters violate vr=bk: {params}")
    return params


def set_orbit(gens, base_set, limit=BLOCK_ORBIT_LIMIT):
    """Orbit of a point set under the generated group, as sorted tuples
    in breadth-first order.  None of the callers tolerate an unbounded
    blowup, so the limit is enforced."""
    start = tuple(sorted(base_set))
    out = [start]
    seen = {start}
    q = 0
    while q < len(out):
        s = out[q]
        q += 1
        for g in gens:
            img = g.images
            t = tuple(sorted(int(img[x]) for x in s))
            if t not in seen:
                if len(out) >= limit:
                    raise ResourceLimitError(
                        f"block orbit exceeds limit {limit}")
                seen.add(t)
                out.append(t)
    return out


def coset_geometry(G: StabilizerChain, point_action: GroupAction, K_gens,
                   limit=BLOCK_ORBIT_LIMIT) -> Design:
    """Design with base block the K-orbit of point 0 and block set its
    orbit under the point action (cosets of H against cosets of K,
    incidence by nonempty intersection)."""
    K_gens = list(K_gens)
    for kgen in K_gens:
        if kgen not in G:
            raise InputError("K is not a subgroup of G: generator outside G")
    K_images = [point_action.image_of(kgen) for kgen in K_gens]
    base_block = tuple(sorted(orbit(K_images, 0, point_action.degree)))
    if len(base_block) == point_action.degree:
        raise InputError("K-orbit of the base point is the whole point set")
    k_order = bsgs_build(K_gens, G.degree).order()
    if k_order % len(base_block):
        raise InputError(
            f"|K|={k_order} is not a multiple of the base block size {len(base_block)}")
    blocks = set_orbit(point_action.generators, base_block, limit)
    return Design(point_action.degree, blocks)


def block_stabilizer_order(point_action: GroupAction, design: Design) -> int:
    """|G_B| for the first block, via orbit-stabilizer on the block orbit."""
    blocks = set_orbit(point_action.generators, design.blocks[0])
    return point_action.order // len(blocks)


def orbit_block_search(A: GroupAction, k: int, target: ParameterSet,
                       limit=SUBSET_ENUM_LIMIT) -> list[Design]:
    """All A-orbits of k-subsets that verify as 2-designs with the target
    parameters, by exhaustive enumeration of k-subsets."""
    from math import comb

    total = comb(A.degree, k)
    if total > limit:
        raise ResourceLimitError(
            f"C({A.degree},{k}) = {total} exceeds the enumeration bound {limit}; "
            "use coset_geometry with explicit block-stabilizer generators")
    found = []
    seen = set()
    for subset in combinations(range(A.degree), k):
        if subset in seen:
            continue
        ob = set_orbit(A.generators, subset)
        seen.update(ob)
        if len(ob) != target.b:
            continue
        design = Design(A.degree, ob)
        try:
            params = verify_2design(design)
        except DesignError:
            continue
        if params == target:
            found.append(design)
    return found


def is_flag_transitive(A: GroupAction, design: Design) -> FlagReport:
    """Point-transitivity plus transitivity of the point stabilizer on the
    blocks through the point."""
    block_set = design.block_set()
    for g in A.generators:
        img = g.images
        for b in design.blocks:
            t = tuple(sorted(int(img[x]) for x in b))
            if t not in block_set:
                raise InputError(
                    f"generator {g!r} maps block {b} outside the design")
    from .actions import is_transitive

    if not is_transitive(A):
        return FlagReport(False, 0, [])
    alpha = 0
    through = [b for b in design.blocks if alpha in b]
    stab = point_stabilizer_gens(A, alpha)
    seen = set()
    orbit_counts = []
    for b in through:
        if b in seen:
            continue
        ob = set_orbit(stab, b)
        ob = [t for t in ob if alpha in t]
        seen.update(ob)
        orbit_counts.append(len(ob))
    return FlagReport(len(orbit_counts) == 1, len(through), orbit_counts)


def suzuki_design(q: int) -> Design:
    """The ovoid design 2-(q^2+1, q, q-1): each block is a circle with
    its distinguished point removed, the distinguished point being the
    unique one whose removal leaves a block with orbit length q(q^2+1)."""
    from sympy import isprime

    from .suzuki import circles, ovoid_points, suzuki_action

    if not isprime(q - 1):
        raise InputError(f"q-1 = {q - 1} is not (Mersenne) prime")
    act = suzuki_action(q)
    ov = ovoid_points(q)
    circ = circles(q, ov)
    b_expected = q * (q * q + 1)

    # the circles form one orbit, so the selection transports from one circle
    circle_orbit = set_orbit(act.generators, circ[0])
    if sorted(circle_orbit) != circ:
        raise DesignError("circle set is not a single orbit")

    good = []
    for p in circ[0]:
        candidate = tuple(x for x in circ[0] if x != p)
        try:
            ob = set_orbit(act.generators, candidate, limit=b_expected + 1)
        except ResourceLimitError:
            continue
        if len(ob) == b_expected:
            good.append(ob)
    if len(good) != 1:
        raise DesignError(
            f"expected exactly one distinguished point per circle, found {len(good)}")
    design = Design(act.degree, good[0])

    params = verify_2design(design)
    if params.astuple() != (q * q + 1, b_expected, q * q, q, q - 1):
        raise DesignError(f"unexpected parameters {params}")
    report = is_flag_transitive(act, design)
    if not report.flag_transitive:
        raise DesignError("ovoid design is not flag-transitive under Sz(q)")
    # every block lies in a unique circle and omits exactly one of its points
    by_pair = {}
    for ci, c in enumerate(circ):
        for pr in combinations(c, 2):
            by_pair.setdefault(pr, []).append(ci)
    for blk in design.blocks:
        hosts = [ci for ci in by_pair[(blk[0], blk[1])]
                 if set(blk) <= set(circ[ci])]
        if len(hosts) != 1 or len(set(circ[hosts[0]]) - set(blk)) != 1:
            raise DesignError(f"block {blk} not a once-punctured circle")
    return design


# ---------------------------------------------------------------------------
# isomorphism testing


def _point_invariants(design: Design):
    """Per-point multiset of pairwise intersection sizes of incident blocks."""
    through = [[] for _ in range(design.v)]
    for bi, b in enumerate(design.blocks):
        for x in b:
            through[x].append(bi)
    blocks = [set(b) for b in design.blocks]
    out = []
    for x in range(design.v):
        profile = {}
        incident = through[x]
        for i, bi in enumerate(incident):
            for bj in incident[i + 1:]:
                s = len(blocks[bi] & blocks[bj])
                profile[s] = profile.get(s, 0) + 1
        out.append(tuple(sorted(profile.items())))
    return out


def _triple_counts(design: Design):
    t3 = {}
    for b in design.blocks:
        for tr in combinations(b, 3):
            t3[tr] = t3.get(tr, 0) + 1
    return t3


def iso_check(d1: Design, d2: Design) -> bool:
    """Invariant-guided backtracking for design isomorphism."""
    if d1.v > 100 or len(d1.blocks) > 500 or d2.v > 100 or len(d2.blocks) > 500:
        raise ResourceLimitError("design too large for isomorphism backtracking")
    if d1.v != d2.v or len(d1.blocks) != len(d2.blocks):
        return False
    if sorted(len(b) for b in d1.blocks) != sorted(len(b) for b in d2.blocks):
        return False
    inv1, inv2 = _point_invariants(d1), _point_invariants(d2)
    if sorted(inv1) != sorted(inv2):
        return False
    t31, t32 = _triple_counts(d1), _triple_counts(d2)

    def t3_of(t3, x, y, z):
        return t3.get(tuple(sorted((x, y, z))), 0)

    v = d1.v
    image = [-1] * v
    used = [False] * v

    def extend(p):
        if p == v:
            mapped = {tuple(sorted(image[x] for x in b)) for b in d1.blocks}
            return mapped == d2.block_set()
        for q in range(v):
            if used[q] or inv1[p] != inv2[q]:
                continue
            ok = True
            for x in range(p):
                for y in range(x + 1, p):
                    if t3_of(t31, x, y, p) != t3_of(t32, image[x], image[y], q):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            image[p] = q
            used[q] = True
            if extend(p + 1):
                return True
            used[q] = False
            image[p] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# text format


def design_to_text(design: Design) -> str:
    """Canonical text form: `v <n>` then one block per line, 1-indexed."""
    lines = [f"v {design.v}"]
    for b in design.blocks:
        lines.append(" ".join(str(x + 1) for x in b))
    return "\n".join(lines) + "\n"


def design_from_text(text: str) -> Design:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("v "):
        raise InputError("design text must start with a `v <n>` line")
    v = int(lines[0].split()[1])
    blocks = []
    for ln in lines[1:]:
        blocks.append(tuple(int(tok) - 1 for tok in ln.split()))
    return Design(v, blocks)

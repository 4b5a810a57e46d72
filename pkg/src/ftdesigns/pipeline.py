"""The candidate-parameter pipeline.

Stage 1 enumerates feasible (v, b, r, k, lambda) tuples from group and
subgroup orders alone, one batch per conjugacy class of large maximal
subgroups.  Stage 2 discards tuples whose block count is divisible by
no maximal-subgroup index.  Stage 3 discards tuples violating the
subdegree divisibility condition r | lambda*e, using point-stabilizer
orbit lengths computed from the bundled permutation catalog.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

from .actions import GroupAction, SubdegreeProfile, coset_action, subdegrees
from .designs import ParameterSet
from .errors import InputError
from .groupdata import OrdersRecord, catalog_entry, orders_table

STATUS_FEASIBLE = "feasible"
STATUS_INDEX = "eliminated-by-index"
STATUS_SUBDEGREE = "eliminated-by-subdegree"
STATUS_DESIGN = "design-found"
STATUS_NO_DESIGN = "no-design"

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73]


@dataclass(frozen=True)
class CandidateRecord:
    group: str
    subgroup: str
    nr: int
    params: ParameterSet
    status: str = STATUS_FEASIBLE
    witness: int | None = None

    def sort_key(self):
        return (self.group, self.subgroup, self.nr, self.params.lam,
                self.params.b, self.params.astuple())


def _odd_prime_divisors(n):
    out = []
    for p in _PRIMES:
        if p > 2 and n % p == 0:
            out.append(p)
    return out


def _divisors_of_smooth(n):
    """Divisors of n, where n must factor over the fixed small-prime list
    (every quantity in the pipeline divides a sporadic group order)."""
    out = [1]
    for p in _PRIMES:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out = [d * p**i for d in out for i in range(e + 1)]
    if n != 1:
        raise InputError(f"leftover factor {n}: quantity is not smooth")
    return sorted(out)


def enumerate_parameters(order_G: int, order_H: int, lam_set,
                         coprime_mode: bool = False,
                         defer_fisher: bool = False) -> list[ParameterSet]:
    """All feasible parameter sets for a point-stabilizer of the given
    order.

    v = |G|/|H|; for each lambda, r runs over the divisors of
    gcd(lambda(v-1), lcm(lambda, |H|)) that lambda divides; a tuple is
    kept when k = 1 + lambda(v-1)/r and b = vr/k are integral,
    2 < k < v-1, v < b, and lambda v < r^2.  ``coprime_mode`` asks for
    gcd(r, lambda) = 1 instead of lambda | r; ``defer_fisher`` drops the
    lambda v < r^2 cut.
    """
    if order_G % order_H:
        raise InputError(f"|H|={order_H} does not divide |G|={order_G}")
    v = order_G // order_H
    found = []
    for lam in lam_set:
        if order_G % lam:
            continue  # lambda must divide the group order; others are inert
        bound = gcd(lam * (v - 1), lam * order_H // gcd(lam, order_H))
        for r in _divisors_of_smooth(bound):
            if coprime_mode:
                if gcd(r, lam) != 1:
                    continue
            elif r % lam:
                continue
            if (lam * (v - 1)) % r:
                continue
            k = 1 + lam * (v - 1) // r
            if not (2 < k < v - 1):
                continue
            if (v * r) % k:
                continue
            b = v * r // k
            if not v < b:
                continue
            if not defer_fisher and not lam * v < r * r:
                continue
            params = ParameterSet(v, b, r, k, lam)
            if not defer_fisher:
                params.check_identities()
            found.append(params)
    return sorted(found, key=lambda p: (p.lam, p.b))


def enumerate_all(table: list[OrdersRecord] | None = None,
                  include_lambda_2: bool = False,
                  coprime_mode: bool = False,
                  defer_fisher: bool = False) -> list[CandidateRecord]:
    """One record per feasible tuple, over every large maximal subgroup
    (per conjugacy class) of every group in the orders table."""
    if table is None:
        table = orders_table()
    records = []
    for rec in table:
        lam_set = _odd_prime_divisors(rec.order)
        if include_lambda_2:
            lam_set = [2] + lam_set
        for m in rec.large_maximals():
            for params in enumerate_parameters(rec.order, m.order, lam_set,
                                               coprime_mode, defer_fisher):
                records.append(CandidateRecord(rec.name, m.name, m.nr, params))
    return sorted(records, key=CandidateRecord.sort_key)


def group_counts(records) -> dict[str, int]:
    counts = {}
    for rec in records:
        counts[rec.group] = counts.get(rec.group, 0) + 1
    return counts


def index_divides_filter(rec: CandidateRecord, maximal_orders, order_G):
    """Keep the record only if some maximal-subgroup index divides b;
    returns the (possibly eliminated) record and the surviving orders."""
    if rec.status != STATUS_FEASIBLE:
        return rec, []
    survivors = [mo for mo in maximal_orders if rec.params.b % (order_G // mo) == 0]
    if survivors:
        return rec, survivors
    return replace(rec, status=STATUS_INDEX), []


def subdegree_filter(rec: CandidateRecord, profile: SubdegreeProfile) -> CandidateRecord:
    """Eliminate the record if some nontrivial subdegree e has
    r not dividing lambda*e; the witness is the smallest failing e."""
    if rec.status != STATUS_FEASIBLE:
        return rec
    r, lam = rec.params.r, rec.params.lam
    for e, _mult in profile.entries:
        if e == 1:
            continue
        if (lam * e) % r:
            return replace(rec, status=STATUS_SUBDEGREE, witness=e)
    return rec


# (group, subgroup, nr) -> how to realize the action from the catalog:
# (entry name, subgroup name or None for the natural action, subgroup nr)
PROFILE_SOURCES = {
    ("M23", "L3(4).2_2", 2): ("M23", "L3(4).2_2", 2),
    ("M23", "2^4:A7", 3): ("M23", "2^4:A7", 3),
    ("M23", "M11", 5): ("M23", "M11", 5),
    ("M24", "M22.2", 2): ("M24", "M22.2", 2),
    ("J1", "19:6", 4): ("J1", None, None),
    ("J1", "11:10", 5): ("J1", "11:10", 5),
    ("HS", "M22", 1): ("HS", None, None),
    ("HS:2", "M22.2", 2): ("HS:2", None, None),
    ("McL", "M22", 2): ("McL", "M22", 2),
    ("McL", "M22", 3): ("McL", "M22", 3),
}


def action_for(entry_name: str, subgroup_name: str | None,
               subgroup_nr: int | None = None) -> GroupAction:
    """The natural catalog action, or the coset action on a bundled
    subgroup's cosets."""
    entry = catalog_entry(entry_name)
    natural = GroupAction.natural(entry.name, entry.generators, entry.degree)
    if subgroup_name is None:
        return natural
    sub = next(s for s in entry.subgroups
               if s.name == subgroup_name
               and (subgroup_nr is None or s.nr == subgroup_nr))
    return coset_action(natural.chain, sub.generators,
                        name=f"{entry.name} on cosets of {sub.name}")


def compute_profiles(keys=None, threads: int = 1):
    """Subdegree profiles for the bundled actions, keyed by
    (group, subgroup, nr).  Deterministic regardless of thread count."""
    wanted = sorted(PROFILE_SOURCES if keys is None else keys)

    def one(key):
        entry_name, sub_name, sub_nr = PROFILE_SOURCES[key]
        return key, subdegrees(action_for(entry_name, sub_name, sub_nr))

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, wanted))
    else:
        results = [one(k) for k in wanted]
    return dict(results)


def run_filters(records, table=None, profiles=None):
    """Apply the index filter then the subdegree filter to every record."""
    if table is None:
        table = orders_table()
    by_name = {rec.name: rec for rec in table}
    out = []
    for rec in records:
        grp = by_name[rec.group]
        rec, _ = index_divides_filter(rec, [m.order for m in grp.maximals], grp.order)
        if profiles is not None:
            key = (rec.group, rec.subgroup, rec.nr)
            if key in profiles:
                rec = subdegree_filter(rec, profiles[key])
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# reporting


def emit_report(records, fmt: str = "csv") -> str:
    """Deterministic rendering of candidate records."""
    records = sorted(records, key=CandidateRecord.sort_key)
    header = ["group", "subgroup", "nr", "v", "b", "r", "k", "lambda",
              "status", "witness"]
    rows = [[rec.group, rec.subgroup, str(rec.nr), *map(str, rec.params.astuple()),
             rec.status, "" if rec.witness is None else str(rec.witness)]
            for rec in records]
    if fmt == "csv":
        return "\n".join([",".join(header)] + [",".join(r) for r in rows]) + "\n"
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown report format {fmt!r}")


def emit_count_summary(records, table=None, fmt: str = "csv") -> str:
    """Per-group candidate counts plus the grand total."""
    if table is None:
        table = orders_table()
    counts = group_counts(records)
    rows = [(rec.name, counts.get(rec.name, 0)) for rec in table]
    total = sum(c for _, c in rows)
    if fmt == "csv":
        lines = ["group,count"] + [f"{g},{c}" for g, c in rows] + [f"TOTAL,{total}"]
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = ["| group | count |", "|---|---|"]
        lines += [f"| {g} | {c} |" for g, c in rows] + [f"| TOTAL | {total} |"]
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown report format {fmt!r}")


def emit_eliminated(records, fmt: str = "csv") -> str:
    """The subdegree-eliminated rows with their witnesses."""
    rows = [rec for rec in records if rec.status == STATUS_SUBDEGREE]
    return emit_report(rows, fmt)

"""Catalog of permutation generators and the orders table.

Catalog text format (line oriented, 1-indexed cycles at the boundary):

    # comment
    group <name> degree <n> order <N>
    gen <cycles>
    subgroup <name> order <N> [nr <k>]
    gen <cycles>
    end
    end

The orders table lists every studied group with its maximal subgroup
orders in the standard descending numbering:

    group <name> order <N>
    max <nr> <name> order <N>
    end

Bundled data is trusted only after validation: declared orders are
recomputed from stabilizer chains, subgroup generators are sifted into
the parent, and the large-subgroup flags are recomputed from the cube
bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .bsgs import bsgs_build, contains
from .errors import InputError, ParseError
from .perm import Permutation, format_cycles, parse_cycles


@dataclass
class SubgroupData:
    name: str
    order: int
    generators: list[Permutation] = field(default_factory=list)
    nr: int | None = None


@dataclass
class CatalogEntry:
    name: str
    degree: int
    order: int
    generators: list[Permutation] = field(default_factory=list)
    subgroups: list[SubgroupData] = field(default_factory=list)

    def subgroup(self, name):
        for s in self.subgroups:
            if s.name == name:
                return s
        raise InputError(f"no subgroup {name!r} under {self.name}")


def parse_catalog(text: str) -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []
    names = set()
    entry: CatalogEntry | None = None
    sub: SubgroupData | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind = tokens[0]
        try:
            if kind == "group":
                if entry is not None:
                    raise ParseError("nested group block", lineno)
                if tokens[2] != "degree" or tokens[4] != "order":
                    raise ParseError("malformed group header", lineno)
                name = tokens[1]
                if name in names:
                    raise InputError(f"duplicate group name {name!r}")
                names.add(name)
                entry = CatalogEntry(name, int(tokens[3]), int(tokens[5]))
            elif kind == "subgroup":
                if entry is None or sub is not None:
                    raise ParseError("subgroup block outside a group", lineno)
                if tokens[2] != "order":
                    raise ParseError("malformed subgroup header", lineno)
                nr = None
                if len(tokens) > 4:
                    if tokens[4] != "nr":
                        raise ParseError("malformed subgroup header", lineno)
                    nr = int(tokens[5])
                sub = SubgroupData(tokens[1], int(tokens[3]), [], nr)
            elif kind == "gen":
                if entry is None:
                    raise ParseError("gen line outside a group", lineno)
                try:
                    perm = parse_cycles(line[3:].strip(), entry.degree)
                except InputError as exc:
                    raise ParseError(str(exc), lineno) from None
                (sub.generators if sub is not None else entry.generators).append(perm)
            elif kind == "end":
                if sub is not None:
                    entry.subgroups.append(sub)
                    sub = None
                elif entry is not None:
                    entries.append(entry)
                    entry = None
                else:
                    raise ParseError("stray end", lineno)
            else:
                raise ParseError(f"unknown directive {kind!r}", lineno)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, (ParseError, InputError)):
                raise
            raise ParseError(f"malformed line: {raw.strip()!r}", lineno) from None
    if entry is not None or sub is not None:
        raise ParseError("unterminated block at end of input")
    return entries


def serialize_catalog(entries) -> str:
    out = []
    for e in entries:
        out.append(f"group {e.name} degree {e.degree} order {e.order}")
        for g in e.generators:
            out.append(f"gen {format_cycles(g)}")
        for s in e.subgroups:
            head = f"subgroup {s.name} order {s.order}"
            if s.nr is not None:
                head += f" nr {s.nr}"
            out.append(head)
            for g in s.generators:
                out.append(f"gen {format_cycles(g)}")
            out.append("end")
        out.append("end")
    return "\n".join(out) + "\n"


@dataclass
class ValidationCheck:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    entry: str
    checks: list[ValidationCheck]

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def lines(self):
        out = [f"{self.entry}: {'ok' if self.passed else 'FAILED'}"]
        for c in self.checks:
            out.append(f"  [{'ok' if c.passed else 'XX'}] {c.label}"
                       + (f" ({c.detail})" if c.detail else ""))
        return out


def validate_entry(entry: CatalogEntry) -> ValidationReport:
    """Recompute orders and containments; failures are report content."""
    checks = []
    chain = bsgs_build(entry.generators, entry.degree)
    got = chain.order()
    checks.append(ValidationCheck(
        "group order", got == entry.order, f"declared {entry.order}, computed {got}"))
    for s in entry.subgroups:
        if not s.generators:
            checks.append(ValidationCheck(f"subgroup {s.name}: no generators", True,
                                          "orders-only entry"))
            continue
        inside = all(contains(chain, g) for g in s.generators)
        checks.append(ValidationCheck(f"subgroup {s.name}: containment", inside))
        sorder = bsgs_build(s.generators, entry.degree).order()
        checks.append(ValidationCheck(
            f"subgroup {s.name}: order", sorder == s.order,
            f"declared {s.order}, computed {sorder}"))
    return ValidationReport(entry.name, checks)


@dataclass
class MaximalSubgroup:
    nr: int
    name: str
    order: int
    large: bool


@dataclass
class OrdersRecord:
    name: str
    order: int
    maximals: list[MaximalSubgroup]

    def large_maximals(self):
        return [m for m in self.maximals if m.large]

    def maximal_indices(self):
        return [self.order // m.order for m in self.maximals]


def parse_orders(text: str) -> list[OrdersRecord]:
    records = []
    cur = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "group":
            if cur is not None:
                raise ParseError("nested group block", lineno)
            cur = OrdersRecord(tokens[1], int(tokens[3]), [])
        elif tokens[0] == "max":
            if cur is None or tokens[3] != "order":
                raise ParseError("max line outside group", lineno)
            order = int(tokens[4])
            if cur.order % order:
                raise InputError(
                    f"{cur.name}: subgroup order {order} does not divide {cur.order}")
            cur.maximals.append(MaximalSubgroup(
                int(tokens[1]), tokens[2], order, cur.order <= order**3))
        elif tokens[0] == "end":
            records.append(cur)
            cur = None
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", lineno)
    if cur is not None:
        raise ParseError("unterminated block at end of input")
    return records


def _data_text(name):
    return resources.files("ftdesigns.data").joinpath(name).read_text()


def orders_table() -> list[OrdersRecord]:
    """The bundled orders table (group and maximal-subgroup orders)."""
    return parse_orders(_data_text("orders.txt"))


def load_catalog() -> list[CatalogEntry]:
    """The bundled generator catalog."""
    return parse_catalog(_data_text("catalog.txt"))


def catalog_entry(name) -> CatalogEntry:
    for e in load_catalog():
        if e.name == name:
            return e
    raise InputError(f"no catalog entry {name!r}")

"""AG-group axioms, validation and classification.

An AG-group is a groupoid with

* the left invertive law ``(x*y)*z == (z*y)*x``,
* a left identity ``e`` (``e*x == x``),
* two-sided inverses ``x⁻¹*x == x*x⁻¹ == e``.

Witnesses are always the lexicographically least violating tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Optional

from .audit import FAIL, PASS, Audit, InternalInvariantError, failed, out_of_scope, passed
from .tables import CayleyTable, column, row


class InverseError(ValueError):
    def __init__(self, element: int, reason: str):
        self.element = element
        self.reason = reason
        super().__init__(f"{reason} for {element}")


class NotAnAGGroup(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(report.problems()))


@dataclass(frozen=True)
class AGGroup:
    table: CayleyTable
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.table.order

    def mul(self, a: int, b: int) -> int:
        return self.table.entries[a][b]

    @cached_property
    def classification(self) -> "Classification":
        return classify(self)

    @property
    def proper(self) -> bool:
        return self.classification.proper

    @property
    def commutative(self) -> bool:
        return self.classification.commutative


def find_left_identities(t: CayleyTable) -> list[int]:
    ident = tuple(range(t.order))
    return [a for a in range(t.order) if t.entries[a] == ident]


def check_left_invertive(t: CayleyTable) -> Optional[tuple[int, int, int]]:
    """``None`` if ``(x*y)*z == (z*y)*x`` everywhere, else the least failing (x, y, z)."""
    m = t.entries
    for x, y, z in product(range(t.order), repeat=3):
        if m[m[x][y]][z] != m[m[z][y]][x]:
            return (x, y, z)
    return None


def build_inverse_map(t: CayleyTable, e: int) -> tuple[int, ...]:
    m = t.entries
    inv = []
    for x in range(t.order):
        ys = [y for y in range(t.order) if m[y][x] == e and m[x][y] == e]
        if not ys:
            raise InverseError(x, "no inverse")
        if len(ys) > 1:
            raise InverseError(x, "ambiguous inverse")
        inv.append(ys[0])
    return tuple(inv)


def _is_bijection(images) -> bool:
    return len(set(images)) == len(images)


@dataclass
class ValidationReport:
    order: int
    left_invertive: Optional[tuple[int, int, int]]
    left_identities: list[int]
    # (left identity tried, element, reason) for the least such identity
    inverse_failure: Optional[tuple[int, int, str]] = None
    group: Optional[AGGroup] = None
    classification: Optional["Classification"] = None

    @property
    def ok(self) -> bool:
        return self.group is not None

    def problems(self) -> list[str]:
        out = []
        if self.left_invertive is not None:
            x, y, z = self.left_invertive
            out.append(f"left invertive law fails at (x,y,z)=({x},{y},{z})")
        if not self.left_identities:
            out.append("no left identity")
        if self.inverse_failure is not None:
            e, x, reason = self.inverse_failure
            out.append(f"{reason} for {x} (left identity {e})")
        return out

    def to_dict(self) -> dict:
        d = {
            "order": self.order,
            "is_ag_group": self.ok,
            "left_invertive": _status(self.left_invertive),
            "left_identity": (
                {"status": PASS, "elements": self.left_identities}
                if self.left_identities
                else {"status": FAIL, "elements": []}
            ),
        }
        if not self.left_identities:
            d["inverses"] = {"status": "skipped", "detail": "no left identity"}
        elif self.inverse_failure is None:
            d["inverses"] = {"status": PASS, "map": list(self.group.inverse) if self.group else None}
        else:
            e, x, reason = self.inverse_failure
            d["inverses"] = {"status": FAIL, "witness": {"identity": e, "element": x, "reason": reason}}
        if self.classification is not None:
            d["classification"] = self.classification.to_dict()
        return d


def _status(witness) -> dict:
    if witness is None:
        return {"status": PASS}
    return {"status": FAIL, "witness": list(witness)}


def check_axioms(t: CayleyTable) -> ValidationReport:
    lil = check_left_invertive(t)
    ids = find_left_identities(t)
    report = ValidationReport(t.order, lil, ids)
    inverse = None
    for e in ids:
        try:
            inverse = build_inverse_map(t, e)
        except InverseError as exc:
            if report.inverse_failure is None:
                report.inverse_failure = (e, exc.element, exc.reason)
            continue
        report.inverse_failure = None
        break
    if lil is None and ids and inverse is not None:
        if len(ids) != 1:
            raise InternalInvariantError(f"AG-group with several left identities {ids}")
        for a in range(t.order):
            if not (_is_bijection(row(t, a)) and _is_bijection(column(t, a))):
                raise InternalInvariantError(f"AG-group whose row/column {a} is not a bijection")
        g = AGGroup(t, ids[0], inverse)
        report.group = g
        report.classification = g.classification
    return report


def validate(t: CayleyTable) -> AGGroup:
    """Return the AG-group on ``t`` or raise :class:`NotAnAGGroup` carrying the report."""
    report = check_axioms(t)
    if not report.ok:
        raise NotAnAGGroup(report)
    return report.group


@dataclass(frozen=True)
class Classification:
    commutative: bool
    commutative_witness: Optional[tuple[int, int]]
    associative: bool
    associative_witness: Optional[tuple[int, int, int]]

    @property
    def proper(self) -> bool:
        return not self.associative

    def to_dict(self) -> dict:
        return {
            "commutative": self.commutative,
            "commutative_witness": list(self.commutative_witness) if self.commutative_witness else None,
            "associative": self.associative,
            "associative_witness": list(self.associative_witness) if self.associative_witness else None,
            "proper": self.proper,
        }


def classify(g: AGGroup) -> Classification:
    m = g.table.entries
    n = g.order
    comm = next(((x, y) for x, y in product(range(n), repeat=2) if m[x][y] != m[y][x]), None)
    assoc = next(
        ((x, y, z) for x, y, z in product(range(n), repeat=3) if m[m[x][y]][z] != m[x][m[y][z]]),
        None,
    )
    return Classification(comm is None, comm, assoc is None, assoc)


def check_distributivity(g: AGGroup, side: str) -> Optional[tuple[int, int, int]]:
    """Least (a, x, y) breaking ``a(xy) = (ax)(ay)`` (left) or ``(xy)a = (xa)(ya)`` (right)."""
    m = g.table.entries
    n = g.order
    if side == "left":
        bad = lambda a, x, y: m[a][m[x][y]] != m[m[a][x]][m[a][y]]
    elif side == "right":
        bad = lambda a, x, y: m[m[x][y]][a] != m[m[x][a]][m[y][a]]
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return next((t for t in product(range(n), repeat=3) if bad(*t)), None)


def theorem_t8_audit(g: AGGroup) -> Audit:
    """Left or right distributive AG-groups are abelian groups."""
    left = check_distributivity(g, "left")
    right = check_distributivity(g, "right")
    c = g.classification
    extra = {
        "left_distributive": left is None,
        "right_distributive": right is None,
        "left_witness": list(left) if left else None,
        "right_witness": list(right) if right else None,
    }
    if left is not None and right is not None:
        return passed("t8", "vacuous: neither left nor right distributive", vacuous=True, **extra)
    if c.commutative and c.associative:
        return passed("t8", "distributive and abelian", vacuous=False, **extra)
    return failed("t8", "distributive but not an abelian group", vacuous=False, **extra)


def abelian_group_audit(g: AGGroup) -> Audit:
    """For commutative AG-groups: the table is an abelian group with identity e."""
    if not g.commutative:
        return out_of_scope("abelian", "not commutative")
    m = g.table.entries
    e = g.identity
    if any(m[x][e] != x for x in range(g.order)) or not g.classification.associative:
        return failed("abelian", "commutative AG-group is not an abelian group")
    return passed("abelian")

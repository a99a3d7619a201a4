"""Everything computed for one AG-group, as a JSON-ready report."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import __version__
from .audit import FAIL, Audit
from .core import AGGroup, abelian_group_audit, theorem_t8_audit
from .groupid import GroupOrderCapError, GroupTable, is_dihedral, is_isomorphic, recognize
from .laws import run_suite
from .mapgroup import (
    PermGroup,
    RightSection,
    automorphism_audit,
    commutative_audit,
    inn_audit,
    inner_mapping_group,
    is_normal,
    left_section,
    left_section_audit,
    lemma2_suite,
    mult_group,
    mult_group_audit,
    observations_audit,
    right_section,
    right_section_audit,
    self_inverse_audit,
    translation_inverses_audit,
    translations,
)

SCHEMA_VERSION = "1"


def safe_recognize(G) -> str:
    try:
        return recognize(G)
    except GroupOrderCapError:
        return f"unsupported(order {G.order})"


@dataclass
class Structure:
    """Lazily computed sections, groups and audits of one AG-group."""

    g: AGGroup

    @cached_property
    def M(self) -> PermGroup:
        return mult_group(self.g)

    @cached_property
    def LS(self) -> PermGroup:
        return left_section(self.g)

    @cached_property
    def RS(self) -> RightSection:
        return right_section(self.g, self.M)

    @cached_property
    def Inn(self) -> PermGroup:
        return inner_mapping_group(self.g, self.M)

    @cached_property
    def lemma1(self):
        return run_suite(self.g)

    @cached_property
    def lemma2(self) -> list[Audit]:
        return lemma2_suite(self.g)

    @cached_property
    def observations(self) -> list[Audit]:
        return observations_audit(self.g, self.M, self.LS, self.Inn)

    @cached_property
    def theorems(self) -> dict[str, Audit]:
        g, M = self.g, self.M
        return {
            "t8": theorem_t8_audit(g),
            "t13": automorphism_audit(g, M),
            "self_inverse": self_inverse_audit(g),
            "translation_inverses": translation_inverses_audit(g),
            "left_section": left_section_audit(g, self.LS),
            "right_section": right_section_audit(g, self.RS),
            "mult_group": mult_group_audit(g, M),
            "inner_mapping_group": inn_audit(g, M, self.Inn),
            "commutative_degenerate": commutative_audit(g, M, self.Inn),
            "abelian": abelian_group_audit(g),
        }

    def all_audits(self) -> list[Audit]:
        return self.lemma2 + self.observations + list(self.theorems.values())

    def failures(self) -> list[str]:
        out = [f"lemma1:{r.name}" + (f"[{r.label}]" if r.label else "") for r in self.lemma1.failures()]
        out += [a.name for a in self.all_audits() if a.status == FAIL]
        return out

    @property
    def ok(self) -> bool:
        return not self.failures()

    def recognized(self) -> dict[str, str]:
        return {"left_section": safe_recognize(self.LS), "mult_group": safe_recognize(self.M), "inner": safe_recognize(self.Inn)}


def _perm_table(G: PermGroup) -> dict:
    return {
        "labels": [G.label(i) for i in range(G.order)],
        "permutations": [list(p.images) for p in G.elements],
        "cayley": [list(r) for r in G.cayley],
    }


def analysis_report(g: AGGroup, validation: dict | None = None) -> dict:
    s = Structure(g)
    n = g.order
    M, LS, Inn = s.M, s.LS, s.Inn
    lefts, rights = translations(g)
    names = s.recognized()
    coincide = all(l.perm == r.perm for l, r in zip(lefts, rights))
    try:
        iso_to_g = (not g.proper) and is_isomorphic(M.group_table(), GroupTable(g.table.entries)) is not None
        dihedral = is_dihedral(M.group_table())
    except GroupOrderCapError:
        iso_to_g, dihedral = None, None
    inn_normal, _ = is_normal(M, Inn)
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "order": n,
        "validation": validation if validation is not None else {"is_ag_group": True},
        "identity": g.identity,
        "inverse_map": list(g.inverse),
        "classification": g.classification.to_dict(),
        "translations": {
            "left": [list(t.perm.images) for t in lefts],
            "right": [list(t.perm.images) for t in rights],
            "coincide": coincide,
        },
        "left_section": {
            "order": LS.order,
            "abelian": LS.is_abelian(),
            "recognized": names["left_section"],
            "table": _perm_table(LS),
        },
        "right_section": s.RS.to_dict(),
        "mult_group": {
            "order": M.order,
            "abelian": M.is_abelian(),
            "recognized": names["mult_group"],
            "dihedral": dihedral,
            "isomorphic_to_G": iso_to_g,
            "table": _perm_table(M),
        },
        "inner": {
            "elements": [Inn.label(i) for i in range(Inn.order)],
            "order": Inn.order,
            "recognized": names["inner"],
            "normal_in_mg": inn_normal,
        },
        "audits": {
            "lemma1": s.lemma1.to_dict(),
            "lemma2": [a.to_dict() for a in s.lemma2],
            "observations": [a.to_dict() for a in s.observations],
            **{k: a.to_dict() for k, a in s.theorems.items()},
        },
        "discrepancies": s.failures(),
    }
    return report

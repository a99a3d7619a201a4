"""Cross-order table of multiplication-group structure for every AG-group class."""
from __future__ import annotations

from collections import Counter

from .analysis import Structure
from .enumeration import MAX_ORDER, EnumerationBoundError, canonical_classes
from .core import validate
from .groupid import GroupOrderCapError, is_dihedral
from .mapgroup import is_normal


def survey(max_order: int, workers: int = 1, bound: int = MAX_ORDER) -> dict:
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if max_order > bound:
        raise EnumerationBoundError(f"order {max_order} exceeds the enumeration bound {bound}")
    rows = []
    tallies = []
    for n in range(1, max_order + 1):
        counts = Counter()
        for k, t in enumerate(canonical_classes(n, workers)):
            g = validate(t)
            s = Structure(g)
            names = s.recognized()
            try:
                dihedral = is_dihedral(s.M.group_table())
            except GroupOrderCapError:
                dihedral = None
            inn_normal, _ = is_normal(s.M, s.Inn)
            audits = {a.name: a.status for a in s.all_audits()}
            audits["lemma1"] = "pass" if s.lemma1.ok else "fail"
            rows.append(
                {
                    "order": n,
                    "class": k,
                    "proper": g.proper,
                    "left_section": names["left_section"],
                    "mult_group": names["mult_group"],
                    "mult_group_order": s.M.order,
                    "mult_group_dihedral": dihedral,
                    "inner": names["inner"],
                    "inn_normal": inn_normal,
                    "audits": audits,
                    "failures": s.failures(),
                    "table": [list(r) for r in t.entries],
                }
            )
            counts["total"] += 1
            counts["proper"] += g.proper
            counts["proper_dihedral"] += bool(g.proper and dihedral)
            counts["proper_inn_normal"] += bool(g.proper and inn_normal)
            counts["audit_failures"] += bool(s.failures())
        tallies.append(
            {
                "order": n,
                "total": counts["total"],
                "proper": counts["proper"],
                "proper_with_dihedral_mult_group": counts["proper_dihedral"],
                "proper_with_normal_inn": counts["proper_inn_normal"],
                "classes_with_audit_failures": counts["audit_failures"],
            }
        )
    return {"max_order": max_order, "rows": rows, "tallies": tallies}

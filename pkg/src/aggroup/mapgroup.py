"""Translations, sections, the multiplication group and the inner mapping group.

For an AG-group with left identity ``e``:

* ``L_a(x) = a*x`` and ``R_a(x) = x*a``;
* the left section ``{L_a}`` and right section ``{R_a}``;
* ``M(G)``, the group generated by all translations, which is exactly the
  set ``{L_a} | {R_a}``;
* ``Inn(G)``, the stabilizer of ``e`` in ``M(G)``.

Products of permutations use :func:`aggroup.tables.compose` (right factor first).
Theorems that only make sense for non-associative AG-groups report
``out-of-scope`` on commutative input instead of failing.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .audit import Audit, InternalInvariantError, failed, out_of_scope, passed
from .core import AGGroup
from .groupid import GroupTable, is_isomorphic
from .tables import CayleyTable, Permutation, column, compose, invert, parse_table, row, serialize_table

LEFT = "L"
RIGHT = "R"


class NotClosedError(ValueError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"product of elements {i} and {j} leaves the set")


@dataclass(frozen=True)
class Translation:
    kind: str
    elem: int
    perm: Permutation

    @property
    def label(self) -> str:
        return f"{self.kind}{self.elem}"


def left_translation(g: AGGroup, a: int) -> Translation:
    return Translation(LEFT, a, Permutation(row(g.table, a)))


def right_translation(g: AGGroup, a: int) -> Translation:
    return Translation(RIGHT, a, Permutation(column(g.table, a)))


class PermGroup:
    """A composition-closed set of permutations with an index Cayley table.

    ``cayley[i][j]`` is the index of ``compose(elements[i], elements[j])``.
    """

    def __init__(self, elements: Iterable[Permutation], labels: Optional[Sequence[str]] = None):
        self.elements = tuple(elements)
        if not self.elements:
            raise ValueError("a group needs at least one element")
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != len(self.elements):
            raise ValueError("one label per element required")
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        cayley = []
        for i, p in enumerate(self.elements):
            r = []
            for j, q in enumerate(self.elements):
                k = self._index.get(compose(p, q).images)
                if k is None:
                    raise NotClosedError(i, j)
                r.append(k)
            cayley.append(tuple(r))
        self.cayley = tuple(cayley)
        n = self.elements[0].degree
        try:
            self.identity_index = self._index[tuple(range(n))]
        except KeyError:
            raise ValueError("set does not contain the identity") from None
        self.inverse_indices = tuple(self._index[invert(p).images] for p in self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._index

    def index(self, p: Permutation) -> int:
        return self._index[p.images]

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return self.elements[i].cycle_notation()

    def label_of(self, p: Permutation) -> str:
        return self.label(self.index(p))

    def element_set(self) -> frozenset:
        return frozenset(self._index)

    def abelian_witness(self) -> Optional[tuple[int, int]]:
        c = self.cayley
        return next(((i, j) for i in range(self.order) for j in range(i) if c[i][j] != c[j][i]), None)

    def is_abelian(self) -> bool:
        return self.abelian_witness() is None

    def group_table(self) -> GroupTable:
        return GroupTable(self.cayley)

    def subgroup(self, indices: Iterable[int]) -> "PermGroup":
        idx = list(indices)
        labels = [self.labels[i] for i in idx] if self.labels is not None else None
        return PermGroup([self.elements[i] for i in idx], labels)

    def serialize(self) -> str:
        """Labelled Cayley table: a ``# labels:`` header, then the table format."""
        header = "# labels: " + " ".join(self.label(i) for i in range(self.order))
        body = CayleyTable.from_rows(self.cayley)
        return header + "\n" + serialize_table(body)

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, degree={self.elements[0].degree})"


def parse_labeled_group(text: str) -> tuple[list[str], CayleyTable]:
    labels: list[str] = []
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("# labels:"):
            labels = s[len("# labels:"):].split()
            break
    return labels, parse_table(text)


def closure(generators: Sequence[Permutation]) -> PermGroup:
    """Group generated by ``generators``.

    Order: identity, then breadth-first levels (products with a generator),
    each level sorted by image array.
    """
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].degree
    if any(p.degree != n for p in generators):
        raise ValueError("generators must share a degree")
    gens = sorted(set(p.images for p in generators))
    ident = tuple(range(n))
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        level = set()
        for p in frontier:
            for q in gens:
                r = tuple(p[v] for v in q)
                if r not in seen:
                    level.add(r)
        level_sorted = sorted(level)
        seen.update(level_sorted)
        order.extend(level_sorted)
        frontier = level_sorted
    return PermGroup([Permutation(p) for p in order])


def translations(g: AGGroup) -> tuple[list[Translation], list[Translation]]:
    n = g.order
    return [left_translation(g, a) for a in range(n)], [right_translation(g, a) for a in range(n)]


def left_section(g: AGGroup) -> PermGroup:
    lefts, _ = translations(g)
    try:
        return PermGroup([t.perm for t in lefts], [t.label for t in lefts])
    except (NotClosedError, ValueError) as exc:
        raise InternalInvariantError(f"left section is not a group: {exc}") from exc


@dataclass
class RightSection:
    translations: list[Translation]
    closed: bool
    # (a, b, label of R_a R_b) for the least pair leaving the set
    witness: Optional[tuple[int, int, str]]

    def to_dict(self) -> dict:
        d: dict = {"closed": self.closed}
        if self.witness is not None:
            a, b, lab = self.witness
            d["witness"] = {"a": a, "b": b, "product": lab}
        return d


def right_section(g: AGGroup, M: Optional[PermGroup] = None) -> RightSection:
    _, rights = translations(g)
    members = {t.perm.images for t in rights}
    witness = None
    for ta, tb in product(rights, repeat=2):
        p = compose(ta.perm, tb.perm)
        if p.images not in members:
            lab = M.label_of(p) if M is not None and p in M else p.cycle_notation()
            witness = (ta.elem, tb.elem, lab)
            break
    return RightSection(rights, witness is None, witness)


def mult_group(g: AGGroup) -> PermGroup:
    """``{L_a} | {R_a}`` labelled ``L0..``, ``R0..``.

    When ``R_a`` coincides with some ``L_b`` (commutative case) only the ``L``
    label is kept.
    """
    lefts, rights = translations(g)
    elements, labels, seen = [], [], set()
    for t in lefts + rights:
        if t.perm.images in seen:
            continue
        seen.add(t.perm.images)
        elements.append(t.perm)
        labels.append(t.label)
    try:
        M = PermGroup(elements, labels)
    except NotClosedError as exc:
        i, j = exc.pair
        raise InternalInvariantError(
            f"translations not closed: {labels[i]}*{labels[j]} is not a translation"
        ) from exc
    generated = closure([t.perm for t in lefts + rights])
    if generated.element_set() != M.element_set():
        raise InternalInvariantError("group generated by translations differs from the translation set")
    return M


def inner_mapping_group(g: AGGroup, M: Optional[PermGroup] = None) -> PermGroup:
    """Stabilizer of the left identity inside ``M(G)``."""
    M = mult_group(g) if M is None else M
    e = g.identity
    return M.subgroup(i for i, p in enumerate(M.elements) if p.images[e] == e)


def _as_indices(G: PermGroup, H) -> list[int]:
    if isinstance(H, PermGroup):
        H = H.elements
    out = []
    for h in H:
        if isinstance(h, int):
            out.append(h)
        elif h in G:
            out.append(G.index(h))
        else:
            raise ValueError("H not a subgroup: element outside G")
    return out


def _check_subgroup(G: PermGroup, idx: list[int]):
    s = set(idx)
    if G.identity_index not in s or any(G.cayley[i][j] not in s for i in s for j in s):
        raise ValueError("H not a subgroup")


def is_normal(G: PermGroup, H) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Whether ``g h g⁻¹`` stays in H for all g; witness (g, h, conjugate) as indices."""
    idx = _as_indices(G, H)
    _check_subgroup(G, idx)
    s = set(idx)
    c = G.cayley
    for gi in range(G.order):
        ginv = G.inverse_indices[gi]
        for h in idx:
            conj = c[c[gi][h]][ginv]
            if conj not in s:
                return False, (gi, h, conj)
    return True, None


def cosets(G: PermGroup, H) -> list[frozenset]:
    """Left cosets gH in order of first appearance."""
    idx = _as_indices(G, H)
    _check_subgroup(G, idx)
    out, covered = [], set()
    for gi in range(G.order):
        if gi in covered:
            continue
        cs = frozenset(G.cayley[gi][h] for h in idx)
        covered |= cs
        out.append(cs)
    return out


def quotient(G: PermGroup, H) -> GroupTable:
    normal, _ = is_normal(G, H)
    if not normal:
        raise ValueError("quotient needs a normal subgroup")
    cs = cosets(G, H)
    where = {x: k for k, c in enumerate(cs) for x in c}
    reps = [min(c) for c in cs]
    return GroupTable([[where[G.cayley[a][b]] for b in reps] for a in reps])


def translation_inverse(g: AGGroup, t: Translation) -> Translation:
    """``R_x⁻¹ = R_{x⁻¹}`` and ``L_x⁻¹ = L_{x⁻¹ e}``."""
    x = t.elem
    if t.kind == RIGHT:
        out = right_translation(g, g.inverse[x])
    else:
        out = left_translation(g, g.mul(g.inverse[x], g.identity))
    if not (compose(t.perm, out.perm).is_identity() and compose(out.perm, t.perm).is_identity()):
        raise InternalInvariantError(f"{out.label} is not the inverse of {t.label}")
    return out


# -- audits -------------------------------------------------------------------

def _comp(p, q):
    return tuple(p[v] for v in q)


def _first_diff(lhs, rhs) -> Optional[int]:
    return next((x for x, (u, v) in enumerate(zip(lhs, rhs)) if u != v), None)


def lemma2_suite(g: AGGroup) -> list[Audit]:
    """The seven translation identities, pointwise for every pair (a, b),
    plus the composition-type table (LL, RR are left translations; LR, RL right).
    """
    m = g.table.entries
    e = g.identity
    n = g.order
    L = [row(g.table, a) for a in range(n)]
    R = [column(g.table, a) for a in range(n)]
    ident = {
        "i": ("L_a R_b = R_(ab)", lambda a, b: [(_comp(L[a], R[b]), R[m[a][b]])]),
        "ii": ("R_a R_b = L_(ab)", lambda a, b: [(_comp(R[a], R[b]), L[m[a][b]])]),
        "iii": ("L_a L_b = R_(ae) R_b", lambda a, b: [(_comp(L[a], L[b]), _comp(R[m[a][e]], R[b]))]),
        "iv": (
            "L_a L_b = L_((ae)b) = L_((be)a)",
            lambda a, b: [(_comp(L[a], L[b]), L[m[m[a][e]][b]]), (_comp(L[a], L[b]), L[m[m[b][e]][a]])],
        ),
        "v": ("R_a L_b = R_((ae)b)", lambda a, b: [(_comp(R[a], L[b]), R[m[m[a][e]][b]])]),
        "vi": ("L_a L_b = L_b L_a", lambda a, b: [(_comp(L[a], L[b]), _comp(L[b], L[a]))]),
        "vii": ("R_a L_b = R_b L_a", lambda a, b: [(_comp(R[a], L[b]), _comp(R[b], L[a]))]),
    }
    out = []
    for name, (text, sides) in ident.items():
        witness = None
        for a, b in product(range(n), repeat=2):
            for lhs, rhs in sides(a, b):
                x = _first_diff(lhs, rhs)
                if x is not None:
                    witness = {"a": a, "b": b, "x": x}
                    break
            if witness:
                break
        if witness:
            out.append(failed(f"lemma2({name})", text, witness))
        else:
            out.append(passed(f"lemma2({name})", text))

    Lset, Rset = set(L), set(R)
    kinds = [("LL", L, L, Lset), ("RR", R, R, Lset), ("LR", L, R, Rset), ("RL", R, L, Rset)]
    witness = None
    for (tag, P, Q, target), (a, b) in product(kinds, product(range(n), repeat=2)):
        if _comp(P[a], Q[b]) not in target:
            witness = {"kinds": tag, "a": a, "b": b}
            break
    text = "L.L, R.R are left translations; L.R, R.L are right translations"
    out.append(failed("lemma2(parity)", text, witness) if witness else passed("lemma2(parity)", text))

    literal = None
    for a in range(n):
        checks = [
            ("L_a L_a = L_a", _comp(L[a], L[a]), L[a]),
            ("R_a R_a = L_a", _comp(R[a], R[a]), L[a]),
            ("L_a R_a = R_a", _comp(L[a], R[a]), R[a]),
            ("R_a L_a = R_a", _comp(R[a], L[a]), R[a]),
        ]
        bad = next((eq for eq, lhs, rhs in checks if lhs != rhs), None)
        if bad:
            literal = {"equation": bad, "a": a}
            break
    out.append(
        out_of_scope(
            "lemma2(parity-literal)",
            "literal equations are read as a composition-type statement and not asserted",
            first_literal_failure=literal,
        )
    )
    return out


def translation_inverses_audit(g: AGGroup) -> Audit:
    n = g.order
    for x in range(n):
        for t in (right_translation(g, x), left_translation(g, x)):
            try:
                translation_inverse(g, t)
            except InternalInvariantError:
                return failed("translation-inverses", "R_x^-1 = R_(x^-1), L_x^-1 = L_(x^-1 e)", {"translation": t.label})
    return passed("translation-inverses", "R_x^-1 = R_(x^-1), L_x^-1 = L_(x^-1 e)")


def left_section_audit(g: AGGroup, LS: PermGroup) -> Audit:
    ab = LS.abelian_witness()
    if LS.order != g.order:
        return failed("left-section", f"order {LS.order}, expected {g.order}")
    if ab is not None:
        i, j = ab
        return failed("left-section", "not abelian", [LS.label(i), LS.label(j)])
    return passed("left-section", "abelian group of order n")


def right_section_audit(g: AGGroup, RS: RightSection) -> Audit:
    if not g.proper:
        return out_of_scope("right-section", "commutative: R_a = L_a, so the right section is the left section")
    if RS.closed:
        return failed("right-section", "right section closed under composition")
    a, b, lab = RS.witness
    return passed("right-section", "not closed under composition", {"a": a, "b": b, "product": lab})


def mult_group_audit(g: AGGroup, M: PermGroup) -> Audit:
    n = g.order
    if not g.proper:
        return out_of_scope(
            "mult-group",
            f"commutative: L_a = R_a, M(G) has order {M.order} and is abelian; order-2n theorem needs a non-associative AG-group",
        )
    ab = M.abelian_witness()
    if M.order != 2 * n:
        return failed("mult-group", f"order {M.order}, expected {2 * n}")
    if ab is None:
        return failed("mult-group", "abelian")
    i, j = ab
    return passed("mult-group", "non-abelian of order 2n", [M.label(i), M.label(j)])


def inn_audit(g: AGGroup, M: PermGroup, Inn: PermGroup) -> Audit:
    if not g.proper:
        status = "trivial" if Inn.order == 1 else f"order {Inn.order}"
        return out_of_scope("inner-mapping-group", f"commutative: Inn(G) is {status}; C2 theorem needs a non-associative AG-group")
    e = g.identity
    want = {row(g.table, e), column(g.table, e)}
    if Inn.element_set() != want or Inn.order != 2:
        return failed("inner-mapping-group", "Inn(G) != {L_e, R_e}", [Inn.label(i) for i in range(Inn.order)])
    return passed("inner-mapping-group", "Inn(G) = {L_e, R_e} ~ C2")


def self_inverse_audit(g: AGGroup) -> Audit:
    """For a != e: a*a = e iff R_a R_a = id; and no R_a (a != e) is the identity."""
    e = g.identity
    text = "a self-inverse <=> R_a^2 = id (a != e); R_a != id (a != e)"
    for a in range(g.order):
        if a == e:
            continue
        Ra = column(g.table, a)
        sq_is_id = all(v == x for x, v in enumerate(_comp(Ra, Ra)))
        if (g.mul(a, a) == e) != sq_is_id:
            return failed("self-inverse", text, {"a": a, "self_inverse": g.mul(a, a) == e})
        if all(v == x for x, v in enumerate(Ra)):
            return failed("self-inverse", text, {"a": a, "fixes_everything": True})
    return passed("self-inverse", text)


def is_automorphism(p: Permutation, g: AGGroup) -> bool:
    m = g.table.entries
    n = g.order
    return p.degree == n and all(p.images[m[x][y]] == m[p.images[x]][p.images[y]] for x in range(n) for y in range(n))


def automorphism_audit(g: AGGroup, M: PermGroup) -> Audit:
    if g.order == 1:
        return out_of_scope("automorphisms", "order 1: M(G) = Aut(G) = trivial group")
    for i, p in enumerate(M.elements):
        if not is_automorphism(p, g):
            return passed("automorphisms", "M(G) contains a non-automorphism", M.label(i))
    return failed("automorphisms", "every element of M(G) is an automorphism")


def observations_audit(g: AGGroup, M: PermGroup, LS: PermGroup, Inn: PermGroup) -> list[Audit]:
    out = []
    normal, w = is_normal(M, Inn)
    witness = None
    if w is not None:
        gi, h, conj = w
        witness = {"g": M.label(gi), "h": M.label(h), "conjugate": M.label(conj)}
    out.append(passed("inn-normality", "recorded only", normal=normal, conjugation_witness=witness))

    if g.proper:
        ls_normal, _ = is_normal(M, LS)
        index = M.order // LS.order if M.order % LS.order == 0 else None
        if ls_normal and index == 2 and quotient(M, LS).order == 2:
            out.append(passed("left-section-index-2", "L_S normal of index 2, M(G)/L_S ~ C2"))
        else:
            out.append(failed("left-section-index-2", "L_S normal of index 2", {"normal": ls_normal, "index": index}))
    else:
        out.append(out_of_scope("left-section-index-2", "commutative: L_S = M(G)"))

    lefts, rights = translations(g)
    if closure([t.perm for t in lefts]).element_set() == LS.element_set():
        out.append(passed("left-mult-group", "<L_a> = L_S"))
    else:
        out.append(failed("left-mult-group", "<L_a> != L_S"))
    if closure([t.perm for t in rights]).element_set() == M.element_set():
        out.append(passed("right-mult-group", "<R_a> = M(G)"))
    else:
        out.append(failed("right-mult-group", "<R_a> != M(G)"))
    return out


def commutative_audit(g: AGGroup, M: PermGroup, Inn: PermGroup) -> Audit:
    """Degenerate case: L_a = R_a, M(G) ~ G and Inn(G) trivial."""
    if g.proper:
        return out_of_scope("commutative-degenerate", "not commutative")
    lefts, rights = translations(g)
    same = all(l.perm == r.perm for l, r in zip(lefts, rights))
    iso = is_isomorphic(M.group_table(), GroupTable(g.table.entries)) is not None
    if same and iso and Inn.order == 1:
        return passed("commutative-degenerate", "L_a = R_a, M(G) ~ G, Inn(G) trivial")
    return failed(
        "commutative-degenerate", "L_a = R_a, M(G) ~ G, Inn(G) trivial",
        {"translations_equal": same, "isomorphic": iso, "inn_order": Inn.order},
    )

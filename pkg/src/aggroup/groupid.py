"""Isomorphism testing and recognition of small groups (order <= 24).

Recognition compares against explicitly constructed models: cyclic groups,
abelian groups by invariant factors, dihedral groups D_m of order 2m
(D_3 is reported as S3), Q8, A4 and S4.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Optional, Sequence

MAX_ORDER = 24


class GroupOrderCapError(ValueError):
    pass


class GroupTable:
    """A finite group given by its multiplication table on indices 0..m-1."""

    def __init__(self, cayley: Sequence[Sequence[int]]):
        c = tuple(tuple(int(v) for v in r) for r in cayley)
        m = len(c)
        if m == 0 or any(len(r) != m for r in c):
            raise ValueError("group table must be square and non-empty")
        if any(not 0 <= v < m for r in c for v in r):
            raise ValueError("group table entry out of range")
        ids = [i for i in range(m) if all(c[i][x] == x and c[x][i] == x for x in range(m))]
        if len(ids) != 1:
            raise ValueError("group table has no two-sided identity")
        e = ids[0]
        inv = []
        for x in range(m):
            ys = [y for y in range(m) if c[x][y] == e and c[y][x] == e]
            if len(ys) != 1:
                raise ValueError(f"element {x} has no inverse")
            inv.append(ys[0])
        for x, y, z in product(range(m), repeat=3):
            if c[c[x][y]][z] != c[x][c[y][z]]:
                raise ValueError(f"not associative at ({x},{y},{z})")
        self.cayley = c
        self.identity = e
        self.inverses = tuple(inv)

    @property
    def order(self) -> int:
        return len(self.cayley)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def is_abelian(self) -> bool:
        c = self.cayley
        return all(c[x][y] == c[y][x] for x in range(self.order) for y in range(x))

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.cayley[y][x]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order})"


def as_group_table(G) -> GroupTable:
    if isinstance(G, GroupTable):
        return G
    return GroupTable(G.cayley)


def order_sequence(G) -> tuple[int, ...]:
    """Sorted multiset of element orders."""
    G = as_group_table(G)
    return tuple(sorted(G.element_order(x) for x in range(G.order)))


@dataclass(frozen=True)
class IsoInvariants:
    order: int
    abelian: bool
    element_orders: tuple[int, ...]
    center_size: int


def invariants(G) -> IsoInvariants:
    G = as_group_table(G)
    c = G.cayley
    m = G.order
    center = sum(1 for x in range(m) if all(c[x][y] == c[y][x] for y in range(m)))
    return IsoInvariants(m, G.is_abelian(), order_sequence(G), center)


def _check_cap(*groups: GroupTable):
    for G in groups:
        if G.order > MAX_ORDER:
            raise GroupOrderCapError(f"group order {G.order} exceeds supported cap {MAX_ORDER}")


def _generators(G: GroupTable) -> list[int]:
    """Greedy generating set, preferring elements of large order."""
    c = G.cayley
    span = {G.identity}
    gens = []
    for x in sorted(range(G.order), key=lambda x: (-G.element_order(x), x)):
        if x in span:
            continue
        gens.append(x)
        frontier = list(span)
        span = set(span)
        while frontier:
            new = []
            for y in frontier:
                for g in gens:
                    z = c[y][g]
                    if z not in span:
                        span.add(z)
                        new.append(z)
            frontier = new
    return gens


def _extend(G: GroupTable, H: GroupTable, gens: list[int], images: list[int]) -> Optional[dict[int, int]]:
    """The unique homomorphism on <gens> sending gens to images, if consistent and injective."""
    cg, ch = G.cayley, H.cayley
    phi = {G.identity: H.identity}
    used = {H.identity: G.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for g, h in zip(gens, images):
                y = cg[x][g]
                w = ch[phi[x]][h]
                if y in phi:
                    if phi[y] != w:
                        return None
                    continue
                if w in used:
                    return None
                phi[y] = w
                used[w] = y
                new.append(y)
        frontier = new
    return phi


def is_isomorphic(G, H) -> Optional[dict[int, int]]:
    """An explicit isomorphism G -> H as an index map, or ``None``."""
    G, H = as_group_table(G), as_group_table(H)
    _check_cap(G, H)
    if invariants(G) != invariants(H):
        return None
    gens = _generators(G)
    by_order: dict[int, list[int]] = {}
    for y in range(H.order):
        by_order.setdefault(H.element_order(y), []).append(y)
    candidates = [by_order.get(G.element_order(g), []) for g in gens]

    def search(k: int, images: list[int]):
        phi = _extend(G, H, gens[:k], images)
        if phi is None:
            return None
        if k == len(gens):
            return phi if len(phi) == G.order else None
        for h in candidates[k]:
            found = search(k + 1, images + [h])
            if found is not None:
                return found
        return None

    phi = search(0, [])
    if phi is None:
        return None
    cg, ch = G.cayley, H.cayley
    if sorted(phi.values()) != list(range(H.order)) or any(
        phi[cg[x][y]] != ch[phi[x]][phi[y]] for x in range(G.order) for y in range(G.order)
    ):
        raise AssertionError("isomorphism search produced a non-homomorphism")
    return dict(sorted(phi.items()))


# -- standard models -----------------------------------------------------------

def cyclic(m: int) -> GroupTable:
    return GroupTable([[(i + j) % m for j in range(m)] for i in range(m)])


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    a, b = G.order, H.order
    return GroupTable(
        [
            [G.cayley[x // b][y // b] * b + H.cayley[x % b][y % b] for y in range(a * b)]
            for x in range(a * b)
        ]
    )


def dihedral(m: int) -> GroupTable:
    """Symmetries of the m-gon: index i < m is r^i, index m + i is s r^i."""

    def mul(x, y):
        i, s = x % m, x >= m
        j, t = y % m, y >= m
        # s r^i * r^j = s r^(i+j);  s r^i * s r^j = r^(j-i);  r^i * s r^j = s r^(j-i)
        if not s and not t:
            return (i + j) % m
        if not s and t:
            return m + (j - i) % m
        if s and not t:
            return m + (i + j) % m
        return (j - i) % m

    return GroupTable([[mul(x, y) for y in range(2 * m)] for x in range(2 * m)])


def quaternion() -> GroupTable:
    """Q8 on (sign, unit) pairs, unit in 1, i, j, k."""
    units = {
        ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    for u in "1ijk":
        units[("1", u)] = units[(u, "1")] = (1, u)
    names = [(s, u) for u in "1ijk" for s in (1, -1)]
    index = {x: k for k, x in enumerate(names)}
    rows = []
    for s1, u1 in names:
        r = []
        for s2, u2 in names:
            s, u = units[(u1, u2)]
            r.append(index[(s * s1 * s2, u)])
        rows.append(r)
    return GroupTable(rows)


def _perm_group_table(perms: list[tuple[int, ...]]) -> GroupTable:
    index = {p: k for k, p in enumerate(perms)}
    return GroupTable([[index[tuple(p[x] for x in q)] for q in perms] for p in perms])


def symmetric4() -> GroupTable:
    return _perm_group_table(sorted(permutations(range(4))))


def _is_even(p) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i) if p[j] > p[i])
    return inversions % 2 == 0


def alternating4() -> GroupTable:
    return _perm_group_table([p for p in sorted(permutations(range(4))) if _is_even(p)])


def _partitions(k: int, largest: Optional[int] = None):
    largest = k if largest is None else largest
    if k == 0:
        yield []
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield [first] + rest


def _factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def abelian_invariant_factors(m: int) -> list[list[int]]:
    """All invariant-factor lists d1 | d2 | ... | dk with product m (ascending)."""
    if m == 1:
        return [[1]]
    primes = sorted(_factorize(m).items())
    out = []
    for parts in product(*[list(_partitions(e)) for _, e in primes]):
        k = max(len(p) for p in parts)
        factors = [1] * k
        for (p, _), part in zip(primes, parts):
            for i, exp in enumerate(part):
                factors[k - 1 - i] *= p ** exp
        out.append(factors)
    return out


def abelian_name(factors: list[int]) -> str:
    return "x".join(f"C{d}" for d in factors)


def abelian(factors: list[int]) -> GroupTable:
    G = cyclic(factors[0])
    for d in factors[1:]:
        G = direct_product(G, cyclic(d))
    return G


@lru_cache(maxsize=None)
def standard_models(m: int) -> tuple[tuple[str, GroupTable], ...]:
    if m > MAX_ORDER:
        raise GroupOrderCapError(f"group order {m} exceeds supported cap {MAX_ORDER}")
    models = [(abelian_name(f), abelian(f)) for f in abelian_invariant_factors(m)]
    if m % 2 == 0 and m // 2 >= 3:
        models.append(("S3" if m == 6 else f"D{m // 2}", dihedral(m // 2)))
    if m == 8:
        models.append(("Q8", quaternion()))
    if m == 12:
        models.append(("A4", alternating4()))
    if m == 24:
        models.append(("S4", symmetric4()))
    return tuple(models)


def model(name: str) -> GroupTable:
    """Look up a shipped model by its name, e.g. ``"D4"`` or ``"C2xC2"``."""
    for m in range(1, MAX_ORDER + 1):
        for n, G in standard_models(m):
            if n == name:
                return G
    raise KeyError(name)


def recognize(G) -> str:
    G = as_group_table(G)
    _check_cap(G)
    inv = invariants(G)
    for name, M in standard_models(G.order):
        if invariants(M) == inv and is_isomorphic(G, M) is not None:
            return name
    return f"unrecognized(order {G.order})"


def is_dihedral(G) -> bool:
    G = as_group_table(G)
    m = G.order
    if m % 2 or m < 6:
        # D_1 ~ C2, D_2 ~ C2xC2 are not counted as dihedral here
        return False
    return is_isomorphic(G, dihedral(m // 2)) is not None

"""Shared tables and independent reference implementations for the tests.

Nothing here imports the search or canonical-form code: the brute-force
helpers are the oracles the package is compared against.
"""
from __future__ import annotations

from itertools import permutations, product

import pytest

from aggroup.enumeration import enumerate_groups
from aggroup.tables import CayleyTable

E1_ROWS = [[0, 1, 2], [2, 0, 1], [1, 2, 0]]
E2_ROWS = [[0, 1, 2, 3], [1, 0, 3, 2], [3, 2, 1, 0], [2, 3, 0, 1]]


def table(rows) -> CayleyTable:
    return CayleyTable.from_rows(rows)


def cyclic_rows(m: int):
    return [[(a + b) % m for b in range(m)] for a in range(m)]


def klein_rows():
    return [[a ^ b for b in range(4)] for a in range(4)]


def abelian_rows():
    """Every abelian group of order <= 6 as (name, rows)."""
    out = [(f"C{m}", cyclic_rows(m)) for m in range(1, 7)]
    out.append(("C2xC2", klein_rows()))
    return out


# -- naive AG-group check, written directly from the axioms --------------------

def naive_is_ag_group(rows) -> bool:
    n = len(rows)
    r = range(n)
    if any(rows[rows[x][y]][z] != rows[rows[z][y]][x] for x in r for y in r for z in r):
        return False
    ids = [e for e in r if all(rows[e][x] == x for x in r)]
    if not ids:
        return False
    e = ids[0]
    return all(any(rows[y][x] == e and rows[x][y] == e for y in r) for x in r)


def relabel_rows(rows, sigma):
    n = len(rows)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[sigma[x]][sigma[y]] = sigma[rows[x][y]]
    return out


def brute_force_classes(n: int) -> list[frozenset]:
    """All AG-group tables of order n grouped into isomorphism classes
    by scanning every one of the n**(n*n) tables."""
    ag = []
    for flat in product(range(n), repeat=n * n):
        rows = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if naive_is_ag_group(rows):
            ag.append(flat)
    seen: set = set()
    classes = []
    for flat in ag:
        if flat in seen:
            continue
        rows = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        orbit = frozenset(
            tuple(v for r in relabel_rows(rows, s) for v in r) for s in permutations(range(n))
        )
        seen |= orbit
        classes.append(orbit)
    return classes


def naive_compose(p, q):
    return tuple(p[q[x]] for x in range(len(q)))


def naive_closure(gens):
    n = len(gens[0])
    elems = {tuple(range(n))} | {tuple(g) for g in gens}
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for b in list(elems):
                for c in (naive_compose(a, b), naive_compose(b, a)):
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
        frontier = new
    return elems


@pytest.fixture(scope="session")
def ag_groups_upto6():
    return [g for n in range(1, 7) for g in enumerate_groups(n)]


@pytest.fixture(scope="session")
def e1_table():
    return table(E1_ROWS)


@pytest.fixture(scope="session")
def e2_table():
    return table(E2_ROWS)

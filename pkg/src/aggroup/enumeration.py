"""Isomorph-free enumeration of AG-groups of small order.

Search: element 0 is the left identity (row 0 fixed to the identity row),
rows and columns are kept Latin with bitmasks, and every placement
propagates the left invertive law ``(xy)z = (zy)x``: once both inner
products of a constraint are known, a known outer product forces the
other.  Inverses are checked on complete tables.  Isomorphic copies are
removed through :func:`canonical_form`.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

import numpy as np

from .core import AGGroup, validate
from .tables import CayleyTable

log = logging.getLogger(__name__)

MAX_ORDER = 8


class EnumerationBoundError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    order: int
    proper_only: bool = False
    count_only: bool = False
    workers: int = 1
    max_order: int = MAX_ORDER

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if self.order > self.max_order:
            raise EnumerationBoundError(f"order {self.order} exceeds the enumeration bound {self.max_order}")


@dataclass
class EnumResult:
    order: int
    total: int
    proper: int
    # canonical tables, ascending; filtered by proper_only; empty when count_only
    tables: list[CayleyTable] = field(default_factory=list)
    summaries: list[dict] = field(default_factory=list)

    def to_dict(self, include_tables: bool = True) -> dict:
        d = {"order": self.order, "total": self.total, "proper": self.proper}
        if include_tables:
            d["classes"] = [
                dict(s, table=[list(r) for r in t.entries]) for s, t in zip(self.summaries, self.tables)
            ]
        return d


# -- canonical form ------------------------------------------------------------

@lru_cache(maxsize=None)
def _relabelings(n: int, e: int) -> tuple[np.ndarray, np.ndarray]:
    """All sigma with sigma[e] == 0, and their inverses."""
    rest = [x for x in range(n) if x != e]
    sig = []
    for images in permutations(range(1, n)):
        s = [0] * n
        s[e] = 0
        for x, v in zip(rest, images):
            s[x] = v
        sig.append(s)
    P = np.array(sig, dtype=np.int16).reshape(len(sig), n)
    Q = np.argsort(P, axis=1).astype(np.int16)
    return P, Q


def _all_relabeled(entries, e: int) -> np.ndarray:
    """Flattened relabelled tables, one row per sigma fixing e -> 0."""
    n = len(entries)
    P, Q = _relabelings(n, e)
    T = np.asarray(entries, dtype=np.int16)
    inner = T[Q[:, :, None], Q[:, None, :]]  # T[sigma^-1 i][sigma^-1 j]
    out = np.take_along_axis(P, inner.reshape(len(P), -1), axis=1)
    return out


def _lexmin_row(rows: np.ndarray) -> np.ndarray:
    cand = rows
    for col in range(rows.shape[1]):
        if len(cand) == 1:
            break
        cand = cand[cand[:, col] == cand[:, col].min()]
    return cand[0]


def canonical_form(g) -> CayleyTable:
    """Lexicographically least relabelling that sends the left identity to 0."""
    if isinstance(g, AGGroup):
        t, e = g.table, g.identity
    else:
        t = g
        ident = tuple(range(t.order))
        e = next(a for a in range(t.order) if t.entries[a] == ident)
    n = t.order
    best = _lexmin_row(_all_relabeled(t.entries, e))
    return CayleyTable.from_rows(best.reshape(n, n).tolist())


# -- backtracking search ---------------------------------------------------------

class _Search:
    def __init__(self, n: int):
        self.n = n
        self.full = (1 << n) - 1
        self.T = [[-1] * n for _ in range(n)]
        self.rowmask = [0] * n
        self.colmask = [0] * n
        self.cells_with = [[] for _ in range(n)]
        self.trail: list[tuple[int, int]] = []
        ok = all(self.assign(0, y, y) for y in range(n))
        assert ok

    def _place(self, x: int, y: int, v: int) -> bool:
        cur = self.T[x][y]
        if cur >= 0:
            return cur == v
        bit = 1 << v
        if (self.rowmask[x] | self.colmask[y]) & bit:
            return False
        self.T[x][y] = v
        self.rowmask[x] |= bit
        self.colmask[y] |= bit
        self.cells_with[v].append((x, y))
        self.trail.append((x, y))
        return True

    def undo(self, mark: int):
        T, trail = self.T, self.trail
        while len(trail) > mark:
            x, y = trail.pop()
            v = T[x][y]
            bit = ~(1 << v)
            self.rowmask[x] &= bit
            self.colmask[y] &= bit
            self.cells_with[v].pop()
            T[x][y] = -1

    def assign(self, x: int, y: int, v: int) -> bool:
        """Place v at (x, y) and propagate; False on contradiction (caller undoes)."""
        if not self._place(x, y, v):
            return False
        queue = [(x, y)]
        T = self.T
        n = self.n
        while queue:
            p, q = queue.pop()
            u = T[p][q]
            # (p,q) as an inner cell: (pq)z = (zq)p for every z
            for z in range(n):
                lhs = T[u][z]
                w = T[z][q]
                if w < 0:
                    continue
                rhs = T[w][p]
                if lhs >= 0:
                    if rhs >= 0:
                        if lhs != rhs:
                            return False
                    else:
                        if not self._place(w, p, lhs):
                            return False
                        queue.append((w, p))
                elif rhs >= 0:
                    if not self._place(u, z, rhs):
                        return False
                    queue.append((u, z))
            # (p,q) as an outer cell: T[x][y] = p gives (xy)q = (qy)x
            for xx, yy in list(self.cells_with[p]):
                w = T[q][yy]
                if w < 0:
                    continue
                rhs = T[w][xx]
                if rhs >= 0:
                    if rhs != u:
                        return False
                else:
                    if not self._place(w, xx, u):
                        return False
                    queue.append((w, xx))
        return True

    def choose(self) -> Optional[tuple[int, int, int]]:
        """Most constrained empty cell as (x, y, candidate mask); None when full."""
        best = None
        best_count = self.n + 1
        T = self.T
        for x in range(1, self.n):
            row = T[x]
            rm = self.rowmask[x]
            for y in range(self.n):
                if row[y] >= 0:
                    continue
                mask = self.full & ~(rm | self.colmask[y])
                c = mask.bit_count()
                if c < best_count:
                    best, best_count = (x, y, mask), c
                    if c <= 1:
                        return best
        return best

    def complete_ok(self) -> bool:
        T = self.T
        for x in range(self.n):
            y = next(y for y in range(self.n) if T[y][x] == 0)
            if T[x][y] != 0:
                return False
        return True

    def solutions(self) -> Iterator[tuple[tuple[int, ...], ...]]:
        pick = self.choose()
        if pick is None:
            if self.complete_ok():
                yield tuple(tuple(r) for r in self.T)
            return
        x, y, mask = pick
        v = 0
        while mask:
            if mask & 1:
                mark = len(self.trail)
                if self.assign(x, y, v):
                    yield from self.solutions()
                self.undo(mark)
            mask >>= 1
            v += 1

    def prefixes(self, depth: int, prefix=()) -> Iterator[tuple]:
        """Decision prefixes (lists of (x, y, v)) that survive propagation."""
        pick = self.choose() if depth > 0 else None
        if pick is None:
            yield prefix
            return
        x, y, mask = pick
        for v in range(self.n):
            if mask >> v & 1:
                mark = len(self.trail)
                if self.assign(x, y, v):
                    yield from self.prefixes(depth - 1, prefix + ((x, y, v),))
                self.undo(mark)


def _classes_under(n: int, prefix: tuple) -> list[tuple[int, ...]]:
    """Canonical forms (flattened) of all solutions extending ``prefix``."""
    s = _Search(n)
    for x, y, v in prefix:
        if not s.assign(x, y, v):
            return []
    seen: set[tuple[int, ...]] = set()
    found: list[tuple[int, ...]] = []
    for sol in s.solutions():
        flat = tuple(v for r in sol for v in r)
        if flat in seen:
            continue
        rel = _all_relabeled(sol, 0)
        seen.update(map(tuple, rel.tolist()))
        found.append(tuple(_lexmin_row(rel).tolist()))
    return found


def _split_depth(n: int, workers: int) -> int:
    return 0 if workers == 1 or n <= 3 else 2


def canonical_classes(n: int, workers: int = 1) -> list[CayleyTable]:
    """All AG-groups of order n up to isomorphism, canonical and ascending."""
    prefixes = list(_Search(n).prefixes(_split_depth(n, workers)))
    if workers == 1:
        parts = [_classes_under(n, p) for p in prefixes]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_classes_under, [n] * len(prefixes), prefixes))
    flats = sorted(set(f for part in parts for f in part))
    return [CayleyTable.from_rows([f[i * n:(i + 1) * n] for i in range(n)]) for f in flats]


def enumerate_ag_groups(cfg: SearchConfig) -> EnumResult:
    n = cfg.order
    tables = canonical_classes(n, cfg.workers)
    summaries, kept = [], []
    proper = 0
    for t in tables:
        g = validate(t)
        c = g.classification
        proper += c.proper
        if cfg.proper_only and not c.proper:
            continue
        kept.append(t)
        summaries.append({"index": len(summaries), "proper": c.proper, "commutative": c.commutative})
    log.debug("order %d: %d classes, %d proper", n, len(tables), proper)
    if cfg.count_only:
        kept, summaries = [], []
    return EnumResult(n, len(tables), proper, kept, summaries)


def enumerate_groups(n: int, workers: int = 1) -> list[AGGroup]:
    """Validated AG-groups, one per isomorphism class."""
    return [validate(t) for t in canonical_classes(n, workers)]

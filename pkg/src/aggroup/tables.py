"""Cayley tables and permutations on the points 0..n-1.

Composition convention: ``compose(p, q)`` applies ``q`` first, so
``compose(p, q).images[x] == p.images[q.images[x]]``.  This matches writing
``L_a R_b (x) = L_a(x b)``; every group table in this package is built with it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class TableError(ValueError):
    """Malformed table text or table data."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class CayleyTable:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        n = len(rows)
        if n == 0:
            raise TableError("table must have order >= 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise TableError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise TableError(f"entry {v} at ({i},{j}) out of range 0..{n - 1}")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "CayleyTable":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def mul(self, a: int, b: int) -> int:
        return self.entries[a][b]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.entries for v in row)

    def relabel(self, sigma: Sequence[int]) -> "CayleyTable":
        """The isomorphic copy where element ``x`` is renamed ``sigma[x]``."""
        n = self.order
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                out[sigma[x]][sigma[y]] = sigma[self.entries[x][y]]
        return CayleyTable.from_rows(out)

    def __str__(self) -> str:
        return serialize_table(self)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation must have degree >= 1")
        if sorted(images) != list(range(n)):
            raise ValueError(f"{list(images)} is not a bijection of 0..{n - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(x == v for x, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point, ordered by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``: x -> p(q(x))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[v] for v in q.images))


def invert(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for x, v in enumerate(p.images):
        out[v] = x
    return Permutation(tuple(out))


def row(t: CayleyTable, a: int) -> tuple[int, ...]:
    """Images of x -> a*x."""
    if not 0 <= a < t.order:
        raise IndexError(f"element {a} out of range 0..{t.order - 1}")
    return t.entries[a]


def column(t: CayleyTable, a: int) -> tuple[int, ...]:
    """Images of x -> x*a."""
    if not 0 <= a < t.order:
        raise IndexError(f"element {a} out of range 0..{t.order - 1}")
    return tuple(r[a] for r in t.entries)


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _tokens(raw: str):
    col = 0
    for piece in raw.split():
        col = raw.index(piece, col)
        yield col + 1, piece
        col += len(piece)


def parse_table(text: str) -> CayleyTable:
    """Parse the table file format.

    ``#`` comment lines and blank lines are skipped.  The first significant
    line holds the order n, followed by exactly n rows of n integers.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise TableError("empty input: expected the table order")
    lineno, raw = lines[0]
    toks = list(_tokens(raw))
    if len(toks) != 1:
        raise TableError("first line must hold only the order n", lineno, toks[1][0] if len(toks) > 1 else 1)
    col, tok = toks[0]
    try:
        n = int(tok)
    except ValueError:
        raise TableError(f"expected an integer order, got {tok!r}", lineno, col) from None
    if n < 1:
        raise TableError(f"order must be >= 1, got {n}", lineno, col)

    body = lines[1:]
    if len(body) != n:
        at = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else lineno + 1)
        raise TableError(f"expected {n} rows, found {len(body)}", at)
    rows = []
    for lineno, raw in body:
        toks = list(_tokens(raw))
        if len(toks) != n:
            raise TableError(f"expected {n} entries, found {len(toks)}", lineno)
        vals = []
        for col, tok in toks:
            try:
                v = int(tok)
            except ValueError:
                raise TableError(f"expected an integer entry, got {tok!r}", lineno, col) from None
            if not 0 <= v < n:
                raise TableError(f"entry {v} out of range 0..{n - 1}", lineno, col)
            vals.append(v)
        rows.append(vals)
    return CayleyTable.from_rows(rows)


def serialize_table(t: CayleyTable) -> str:
    lines = [str(t.order)]
    lines.extend(" ".join(map(str, r)) for r in t.entries)
    return "\n".join(lines) + "\n"


def parse_tables(text: str) -> list[CayleyTable]:
    """Parse a stream of tables separated by blank lines."""
    out = []
    block: list[str] = []
    for raw in text.splitlines() + [""]:
        if raw.strip():
            block.append(raw)
        elif block:
            if any(not l.strip().startswith("#") for l in block):
                out.append(parse_table("\n".join(block)))
            block = []
    return out

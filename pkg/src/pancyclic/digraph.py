"""Dense loop-free digraphs stored as one bitmask row per vertex.

Row ``u`` has bit ``v`` set iff the arc ``u -> v`` is present. Vertices are
labelled ``0..p-1``. Instances are immutable; use :class:`DigraphBuilder` to
assemble one arc by arc.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Digraph",
    "DigraphBuilder",
    "DigraphParseError",
    "arcs_between",
    "bits",
    "complete",
    "directed_cycle",
    "empty",
    "format_digraph",
    "mask_of",
    "parse_digraph",
    "symmetric",
]

Arc = tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class DigraphParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Digraph:
    p: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.p}")
        if len(self.rows) != self.p:
            raise ValueError(f"expected {self.p} rows, got {len(self.rows)}")
        full = (1 << self.p) - 1
        for u, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} references vertices outside 0..{self.p - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")

    # -- construction -------------------------------------------------
    @classmethod
    def from_arcs(cls, p: int, arcs: Iterable[Arc]) -> Digraph:
        b = DigraphBuilder(p)
        for u, v in arcs:
            b.add_arc(u, v)
        return b.freeze()

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[object]]) -> Digraph:
        p = len(matrix)
        rows = []
        for u, r in enumerate(matrix):
            if len(r) != p:
                raise ValueError(f"row {u} has length {len(r)}, expected {p}")
            rows.append(mask_of(v for v, x in enumerate(r) if x))
        return cls(p, tuple(rows))

    # -- basic queries ------------------------------------------------
    @cached_property
    def in_rows(self) -> tuple[int, ...]:
        cols = [0] * self.p
        for u, row in enumerate(self.rows):
            for v in bits(row):
                cols[v] |= 1 << u
        return tuple(cols)

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    def _check(self, x: int) -> None:
        if not 0 <= x < self.p:
            raise ValueError(f"vertex {x} out of range 0..{self.p - 1}")

    def has_arc(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        """True iff at least one of ``u -> v``, ``v -> u`` is present."""
        return self.has_arc(u, v) or self.has_arc(v, u)

    def arcs(self) -> list[Arc]:
        return [(u, v) for u in range(self.p) for v in bits(self.rows[u])]

    @property
    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def out_set(self, x: int) -> frozenset[int]:
        self._check(x)
        return frozenset(bits(self.rows[x]))

    def in_set(self, x: int) -> frozenset[int]:
        self._check(x)
        return frozenset(bits(self.in_rows[x]))

    def out_degree(self, x: int) -> int:
        self._check(x)
        return self.rows[x].bit_count()

    def in_degree(self, x: int) -> int:
        self._check(x)
        return self.in_rows[x].bit_count()

    def degree(self, x: int) -> int:
        return self.out_degree(x) + self.in_degree(x)

    def restricted_out_degree(self, x: int, s: Iterable[int]) -> int:
        self._check(x)
        return (self.rows[x] & self._mask(s)).bit_count()

    def restricted_in_degree(self, x: int, s: Iterable[int]) -> int:
        self._check(x)
        return (self.in_rows[x] & self._mask(s)).bit_count()

    def restricted_degree(self, x: int, s: Iterable[int]) -> int:
        """Number of arcs between ``x`` and members of ``s``, both directions."""
        m = self._mask(s)
        self._check(x)
        return (self.rows[x] & m).bit_count() + (self.in_rows[x] & m).bit_count()

    def _mask(self, s: Iterable[int]) -> int:
        s = list(s)
        for v in s:
            self._check(v)
        return mask_of(s)

    @cached_property
    def min_degree(self) -> int:
        return min(self.rows[x].bit_count() + self.in_rows[x].bit_count() for x in range(self.p))

    @cached_property
    def min_semidegree(self) -> int:
        return min(min(self.rows[x].bit_count(), self.in_rows[x].bit_count()) for x in range(self.p))

    # -- derived digraphs ---------------------------------------------
    def reverse(self) -> Digraph:
        return Digraph(self.p, self.in_rows)

    def induced(self, s: Iterable[int]) -> Digraph:
        """Subdigraph on ``s``, relabelled ``0..|s|-1`` in ascending order."""
        verts = sorted(set(s))
        if not verts:
            raise ValueError("induced subdigraph needs a nonempty vertex set")
        for v in verts:
            self._check(v)
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for u in verts:
            rows.append(mask_of(pos[v] for v in bits(self.rows[u]) if v in pos))
        return Digraph(len(verts), tuple(rows))

    def with_arcs(self, add: Iterable[Arc] = (), remove: Iterable[Arc] = ()) -> Digraph:
        b = DigraphBuilder.from_digraph(self)
        for u, v in remove:
            b.remove_arc(u, v)
        for u, v in add:
            b.add_arc(u, v)
        return b.freeze()

    # -- connectivity -------------------------------------------------
    def reachable_from(self, s: int, reverse: bool = False) -> int:
        rows = self.in_rows if reverse else self.rows
        seen = 1 << s
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_strong(self) -> bool:
        full = self.full_mask
        return self.reachable_from(0) == full and self.reachable_from(0, reverse=True) == full

    def strong_components(self) -> list[frozenset[int]]:
        """Strong components, ordered by their smallest vertex."""
        left = self.full_mask
        comps = []
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.reachable_from(v) & self.reachable_from(v, reverse=True)
            comps.append(frozenset(bits(comp)))
            left &= ~comp
        return comps

    def __str__(self) -> str:
        return format_digraph(self)


class DigraphBuilder:
    """Mutable adjacency used while a digraph is being assembled."""

    def __init__(self, p: int):
        if p < 1:
            raise ValueError(f"vertex count must be >= 1, got {p}")
        self.p = p
        self.rows = [0] * p

    @classmethod
    def from_digraph(cls, d: Digraph) -> DigraphBuilder:
        b = cls(d.p)
        b.rows = list(d.rows)
        return b

    def _check(self, u: int, v: int) -> None:
        if not (0 <= u < self.p and 0 <= v < self.p):
            raise ValueError(f"arc {u}->{v} out of range 0..{self.p - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")

    def add_arc(self, u: int, v: int) -> None:
        self._check(u, v)
        self.rows[u] |= 1 << v

    def remove_arc(self, u: int, v: int) -> None:
        self._check(u, v)
        self.rows[u] &= ~(1 << v)

    def add_edge(self, u: int, v: int) -> None:
        """Add both ``u -> v`` and ``v -> u``."""
        self.add_arc(u, v)
        self.add_arc(v, u)

    def add_clique(self, verts: Iterable[int]) -> None:
        verts = list(verts)
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                self.add_edge(u, v)

    def freeze(self) -> Digraph:
        return Digraph(self.p, tuple(self.rows))


def empty(p: int) -> Digraph:
    return Digraph(p, (0,) * p)


def complete(p: int) -> Digraph:
    """Complete symmetric digraph K*_p."""
    full = (1 << p) - 1
    return Digraph(p, tuple(full & ~(1 << u) for u in range(p)))


def directed_cycle(p: int) -> Digraph:
    if p < 2:
        raise ValueError("a directed cycle needs at least 2 vertices")
    return Digraph.from_arcs(p, ((i, (i + 1) % p) for i in range(p)))


def symmetric(p: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """G* for the undirected graph ``G`` given by ``edges``."""
    b = DigraphBuilder(p)
    for u, v in edges:
        b.add_edge(u, v)
    return b.freeze()


def arcs_between(d: Digraph, a: Iterable[int], b: Iterable[int]) -> list[Arc]:
    """All arcs ``u -> v`` with ``u`` in ``a`` and ``v`` in ``b``."""
    bm = d._mask(b)
    out = []
    for u in sorted(set(a)):
        d._check(u)
        out.extend((u, v) for v in bits(d.rows[u] & bm))
    return out


def format_digraph(d: Digraph) -> str:
    lines = [str(d.p)]
    for u in range(d.p):
        lines.append("".join("1" if d.rows[u] >> v & 1 else "0" for v in range(d.p)))
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """Parse the text format written by :func:`format_digraph`.

    Line 1 is the decimal vertex count ``p``; each of the next ``p`` lines is
    exactly ``p`` characters of ``0``/``1``. A single trailing newline is
    accepted; anything else is an error.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise DigraphParseError(1, "empty input")
    head = lines[0]
    if not head.isdigit() or not head.isascii() or (len(head) > 1 and head[0] == "0"):
        raise DigraphParseError(1, f"expected a positive decimal vertex count, got {head!r}")
    p = int(head)
    if p < 1:
        raise DigraphParseError(1, "vertex count must be >= 1")
    if len(lines) != p + 1:
        at = len(lines) + 1 if len(lines) < p + 1 else p + 2
        raise DigraphParseError(at, f"expected {p} adjacency rows, found {len(lines) - 1}")
    rows = []
    for u in range(p):
        row = lines[u + 1]
        lineno = u + 2
        if len(row) != p:
            raise DigraphParseError(lineno, f"row has {len(row)} characters, expected {p}")
        if set(row) - {"0", "1"}:
            raise DigraphParseError(lineno, "row may contain only '0' and '1'")
        if row[u] != "0":
            raise DigraphParseError(lineno, f"diagonal entry ({u},{u}) must be 0")
        rows.append(mask_of(v for v, ch in enumerate(row) if ch == "1"))
    return Digraph(p, tuple(rows))

"""Paths, cycles and cycle-length spectra.

Two independent routes compute the spectrum: :func:`cycle_spectrum` runs a
pruned backtracking search per length and keeps a witness cycle, while
:func:`spectrum_oracle` runs a dynamic program over vertex subsets and only
reports which lengths exist.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .digraph import Digraph, bits

__all__ = [
    "Cycle",
    "CycleSpectrum",
    "ORACLE_MAX_P",
    "Path",
    "cycle_spectrum",
    "find_cycle_of_length",
    "is_hamiltonian",
    "is_pancyclic",
    "iter_cycles",
    "spectrum_oracle",
    "validate_cycle",
    "validate_path",
]

ORACLE_MAX_P = 14


@dataclass(frozen=True)
class Path:
    verts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        if not self.verts:
            raise ValueError("a path needs at least one vertex")
        if len(set(self.verts)) != len(self.verts):
            raise ValueError(f"path vertices must be distinct: {self.verts}")

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)

    def __getitem__(self, i: int) -> int:
        """1-based access: ``P[1]`` is the first vertex."""
        if not 1 <= i <= len(self.verts):
            raise IndexError(f"path position {i} outside 1..{len(self.verts)}")
        return self.verts[i - 1]

    def reversed(self) -> Path:
        return Path(self.verts[::-1])


@dataclass(frozen=True)
class Cycle:
    """Cycle ``x_1 x_2 ... x_k x_1``; positions are 1-based and taken modulo k."""

    verts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        if len(self.verts) < 2:
            raise ValueError("a cycle needs at least two vertices")
        if len(set(self.verts)) != len(self.verts):
            raise ValueError(f"cycle vertices must be distinct: {self.verts}")

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)

    def __getitem__(self, i: int) -> int:
        return self.verts[(i - 1) % len(self.verts)]

    def index_of(self, v: int) -> int:
        return self.verts.index(v) + 1

    def canonical(self) -> Cycle:
        i = self.verts.index(min(self.verts))
        return Cycle(self.verts[i:] + self.verts[:i])

    def rotate_to(self, i: int) -> Cycle:
        """Relabel so that the current ``x_i`` becomes ``x_1``."""
        j = (i - 1) % len(self.verts)
        return Cycle(self.verts[j:] + self.verts[:j])

    def segment(self, i: int, j: int) -> Path:
        """The path ``x_i x_{i+1} ... x_j`` walking forward around the cycle."""
        k = len(self.verts)
        steps = (j - i) % k
        return Path(tuple(self[i + t] for t in range(steps + 1)))

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.verts)


def validate_path(d: Digraph, verts: Sequence[int]) -> bool:
    verts = tuple(verts)
    if not verts or len(set(verts)) != len(verts):
        return False
    if any(not 0 <= v < d.p for v in verts):
        return False
    return all(d.rows[u] >> v & 1 for u, v in zip(verts, verts[1:]))


def validate_cycle(d: Digraph, verts: Sequence[int]) -> bool:
    verts = tuple(verts)
    if len(verts) < 2 or not validate_path(d, verts):
        return False
    return bool(d.rows[verts[-1]] >> verts[0] & 1)


def _reach_within(rows: Sequence[int], start: int, avail: int) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & avail & ~seen
        seen |= frontier
    return seen


def _cycle_through_anchor(d: Digraph, s: int, k: int) -> Optional[list[int]]:
    """A k-cycle whose smallest vertex is ``s``, or None."""
    rows = d.rows
    back = d.in_rows[s]
    path = [s]

    def extend(cur: int, avail: int, need: int) -> bool:
        cand = rows[cur] & avail
        if need == 1:
            cand &= back
            if cand:
                path.append((cand & -cand).bit_length() - 1)
                return True
            return False
        # the remaining vertices must be reachable from cur inside avail,
        # and at least one of them must close back to s
        reach = _reach_within(rows, cand, avail)
        if reach.bit_count() < need or not reach & back:
            return False
        for v in bits(cand):
            path.append(v)
            if extend(v, avail & ~(1 << v), need - 1):
                return True
            path.pop()
        return False

    avail = d.full_mask & ~((1 << (s + 1)) - 1)
    if avail.bit_count() < k - 1:
        return None
    return path if extend(s, avail, k - 1) else None


def find_cycle_of_length(d: Digraph, k: int) -> Optional[Cycle]:
    """Exact search for a cycle on exactly ``k`` vertices.

    Cycles are anchored at their smallest vertex and extended in ascending
    label order, so the returned witness is canonical and deterministic.
    """
    if not 2 <= k <= d.p:
        raise ValueError(f"cycle length {k} outside 2..{d.p}")
    for s in range(d.p - k + 1):
        found = _cycle_through_anchor(d, s, k)
        if found is not None:
            return Cycle(tuple(found))
    return None


def iter_cycles(d: Digraph, k: int) -> Iterator[Cycle]:
    """Every k-cycle of ``d`` once, in canonical form, in lexicographic order."""
    if not 2 <= k <= d.p:
        raise ValueError(f"cycle length {k} outside 2..{d.p}")
    rows = d.rows
    for s in range(d.p - k + 1):
        back = d.in_rows[s]
        path = [s]

        def extend(cur: int, avail: int, need: int) -> Iterator[Cycle]:
            cand = rows[cur] & avail
            if need == 1:
                for v in bits(cand & back):
                    yield Cycle(tuple(path) + (v,))
                return
            reach = _reach_within(rows, cand, avail)
            if reach.bit_count() < need or not reach & back:
                return
            for v in bits(cand):
                path.append(v)
                yield from extend(v, avail & ~(1 << v), need - 1)
                path.pop()

        yield from extend(s, d.full_mask & ~((1 << (s + 1)) - 1), k - 1)


@dataclass(frozen=True)
class CycleSpectrum:
    p: int
    lengths: frozenset[int]
    witnesses: dict[int, Cycle] = field(default_factory=dict, compare=False)

    def __contains__(self, k: int) -> bool:
        return k in self.lengths

    def missing(self, lo: int = 3) -> tuple[int, ...]:
        return tuple(k for k in range(lo, self.p + 1) if k not in self.lengths)

    @property
    def pancyclic(self) -> bool:
        return self.p >= 3 and not self.missing(3)

    @property
    def hamiltonian(self) -> bool:
        return self.p in self.lengths

    def as_text(self) -> str:
        return ",".join(str(k) for k in sorted(self.lengths))


def cycle_spectrum(d: Digraph, lengths: Optional[Iterable[int]] = None) -> CycleSpectrum:
    """Every cycle length in ``2..p`` present in ``d``, each with a witness.

    ``lengths`` restricts the search; absent lengths outside it are simply
    not examined.
    """
    ks = range(2, d.p + 1) if lengths is None else sorted(set(lengths))
    found = {}
    for k in ks:
        c = find_cycle_of_length(d, k)
        if c is not None:
            found[k] = c
    return CycleSpectrum(d.p, frozenset(found), found)


def spectrum_oracle(d: Digraph) -> CycleSpectrum:
    """Cycle lengths via subset DP; independent of the backtracking search.

    For each anchor ``s`` and each subset ``S`` of vertices above ``s``,
    ``ends[S]`` is the set of ``w`` in ``S`` such that some path starts at
    ``s``, visits exactly ``{s} | S`` and stops at ``w``.
    """
    p = d.p
    if p > ORACLE_MAX_P:
        raise ValueError(
            f"spectrum_oracle is exponential in p; refusing p={p} > {ORACLE_MAX_P}")
    rows, in_rows = d.rows, d.in_rows
    present = set()
    for s in range(p - 1):
        shift = s + 1
        width = p - shift
        closes = in_rows[s] >> shift
        into = [in_rows[shift + i] >> shift for i in range(width)]
        ends = [0] * (1 << width)
        ends[0] = 0
        start = rows[s] >> shift
        for sub in range(1, 1 << width):
            if sub & (sub - 1) == 0:
                e = sub & start
            else:
                e = 0
                rest = sub
                while rest:
                    low = rest & -rest
                    w = low.bit_length() - 1
                    if into[w] & ends[sub ^ low]:
                        e |= low
                    rest ^= low
            ends[sub] = e
            if e & closes:
                present.add(sub.bit_count() + 1)
    return CycleSpectrum(p, frozenset(present))


def is_pancyclic(d: Digraph) -> bool:
    """Cycles of every length ``3..p``; digons do not count."""
    if d.p < 3:
        raise ValueError("pancyclicity needs p >= 3")
    return all(find_cycle_of_length(d, k) is not None for k in range(3, d.p + 1))


def is_hamiltonian(d: Digraph) -> bool:
    if d.p < 3:
        raise ValueError("hamiltonicity check needs p >= 3")
    return find_cycle_of_length(d, d.p) is not None

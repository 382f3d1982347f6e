"""The exceptional digraph families and the degree hypothesis.

Every constructor places its parts on consecutive labels, listed in the
docstring, so pinned spectra and witnesses are reproducible. Recognition
never enumerates all partitions: each family has a small set of candidate
anchors (a vertex or an ordered pair) that fixes the whole partition, and
each candidate is then checked against the full definition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .digraph import Digraph, DigraphBuilder, bits, mask_of

__all__ = [
    "FAMILY_KINDS",
    "FAMILY_NAMES",
    "FamilyLabel",
    "PRECEDENCE",
    "TheoremHypothesis",
    "build_bipartite_range",
    "build_family",
    "build_h2m",
    "build_h_mm",
    "build_h_mm1",
    "build_sub_kmm",
    "build_two_cliques_cut",
    "check_hypothesis",
    "recognize",
    "recognize_all",
    "validate_label",
]

BIPARTITE_RANGE = "BipartiteRange"
SUB_KMM = "SubKmm"
HMM = "Hmm"
HMM1 = "Hmm1"
TWO_CLIQUES_CUT = "TwoCliquesCut"
H2M = "H2m"
H2M_PRIME = "H2mPrime"

FAMILY_KINDS = (BIPARTITE_RANGE, SUB_KMM, HMM, HMM1, TWO_CLIQUES_CUT, H2M, H2M_PRIME)


@dataclass(frozen=True)
class TheoremHypothesis:
    p: int
    min_degree_ok: bool
    min_semidegree_ok: bool
    size_ok: bool

    @property
    def ok(self) -> bool:
        return self.min_degree_ok and self.min_semidegree_ok and self.size_ok

    def failures(self) -> list[str]:
        out = []
        if not self.size_ok:
            out.append("size")
        if not self.min_degree_ok:
            out.append("min_degree")
        if not self.min_semidegree_ok:
            out.append("min_semidegree")
        return out


def check_hypothesis(d: Digraph) -> TheoremHypothesis:
    """Degree conditions of the theorem; semi-degree in the integer form 2*delta0 >= p-2."""
    return TheoremHypothesis(
        p=d.p,
        min_degree_ok=d.min_degree >= d.p - 1,
        min_semidegree_ok=2 * d.min_semidegree >= d.p - 2,
        size_ok=d.p >= 10,
    )


@dataclass(frozen=True)
class FamilyLabel:
    """Family membership plus the partition that proves it.

    ``special`` holds the distinguished vertices: ``(a,)`` for Hmm1,
    ``(c,)`` for the cut vertex of TwoCliquesCut, ``(x, y)`` for H2m/H2mPrime.
    """

    kind: str
    m: int
    A: frozenset[int]
    B: frozenset[int]
    special: tuple[int, ...] = ()
    orientation: Optional[str] = None

    def __str__(self) -> str:
        if self.orientation:
            return f"{self.kind}({self.m},{self.orientation})"
        return f"{self.kind}({self.m})"

    def describe(self) -> str:
        parts = [f"A={_fmt(self.A)}", f"B={_fmt(self.B)}"]
        if self.special:
            names = {HMM1: ("a",), TWO_CLIQUES_CUT: ("c",)}.get(self.kind, ("x", "y"))
            parts += [f"{n}={v}" for n, v in zip(names, self.special)]
        return f"{self} " + " ".join(parts)


def _fmt(s: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


# ---------------------------------------------------------------------------
# constructors


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"family parameter m must be >= 2, got {m}")


def build_bipartite_range(m: int, inner: Optional[Iterable[tuple[int, int]]] = None) -> Digraph:
    """K*_{m,m+1} plus ``inner`` arcs on the m-part.

    Labels: m-part ``0..m-1``, independent (m+1)-part ``m..2m``. ``inner``
    defaults to complete symmetric, giving (K_m + complement(K_{m+1}))*;
    ``inner=()`` gives K*_{m,m+1}.
    """
    _check_m(m)
    b = DigraphBuilder(2 * m + 1)
    for u in range(m):
        for v in range(m, 2 * m + 1):
            b.add_edge(u, v)
    if inner is None:
        b.add_clique(range(m))
    else:
        for u, v in inner:
            if not (0 <= u < m and 0 <= v < m):
                raise ValueError(f"inner arc {u}->{v} leaves the m-part 0..{m - 1}")
            b.add_arc(u, v)
    return b.freeze()


def build_sub_kmm(m: int, deletions: Iterable[tuple[int, int]] = (), strict: bool = False) -> Digraph:
    """K*_{m,m} minus ``deletions``; parts ``0..m-1`` and ``m..2m-1``.

    With ``strict`` the result must satisfy the degree hypothesis.
    """
    _check_m(m)
    b = DigraphBuilder(2 * m)
    for u in range(m):
        for v in range(m, 2 * m):
            b.add_edge(u, v)
    for u, v in deletions:
        if (u < m) == (v < m) or not (0 <= u < 2 * m and 0 <= v < 2 * m):
            raise ValueError(f"{u}->{v} is not a cross arc of K*_{{{m},{m}}}")
        b.remove_arc(u, v)
    d = b.freeze()
    if strict and not check_hypothesis(d).ok:
        raise ValueError(f"deletions break the degree hypothesis: {check_hypothesis(d).failures()}")
    return d


def build_h_mm(m: int, cross: Optional[Iterable[tuple[int, int]]] = None) -> Digraph:
    """A member of H(m,m): two K*_m parts, arcs only from A to B.

    Labels: A = ``0..m-1``, B = ``m..2m-1``. ``cross`` defaults to the
    matching ``i -> m+i``.
    """
    _check_m(m)
    if cross is None:
        cross = [(i, m + i) for i in range(m)]
    cross = list(cross)
    b = DigraphBuilder(2 * m)
    b.add_clique(range(m))
    b.add_clique(range(m, 2 * m))
    for u, v in cross:
        if not (0 <= u < m and m <= v < 2 * m):
            raise ValueError(f"cross arc {u}->{v} must go from A=0..{m - 1} to B={m}..{2 * m - 1}")
        b.add_arc(u, v)
    tails = {u for u, _ in cross}
    heads = {v for _, v in cross}
    if tails != set(range(m)) or heads != set(range(m, 2 * m)):
        raise ValueError("every A-vertex needs a cross out-arc and every B-vertex a cross in-arc")
    return b.freeze()


def build_h_mm1(m: int, orientation: str = "in",
                b_arcs: Optional[Iterable[tuple[int, int]]] = None) -> Digraph:
    """A member of H(m,m-1,1).

    Labels: independent A = ``0..m-1``, B = ``m..2m-2``, a = ``2m-1``.
    Orientation ``in`` forces I(a)=B and a->A; ``out`` forces O(a)=B and
    A->a. ``b_arcs`` are the free arcs inside B u {a}; by default B is
    complete symmetric and a has no arcs beyond the forced ones.
    """
    _check_m(m)
    if orientation not in ("in", "out"):
        raise ValueError(f"orientation must be 'in' or 'out', got {orientation!r}")
    p = 2 * m
    a = p - 1
    A = range(m)
    B = range(m, a)
    bld = DigraphBuilder(p)
    for y in A:
        for z in B:
            bld.add_edge(y, z)
    if b_arcs is None:
        bld.add_clique(B)
    else:
        for u, v in b_arcs:
            if u < m or v < m or u >= p or v >= p:
                raise ValueError(f"arc {u}->{v} leaves B u {{a}} = {m}..{a}; arcs at A are fixed by I(a)/O(a)")
            bld.add_arc(u, v)
    for y in A:
        if orientation == "in":
            bld.add_arc(a, y)
        else:
            bld.add_arc(y, a)
    for z in B:
        if orientation == "in":
            bld.add_arc(z, a)
        else:
            bld.add_arc(a, z)
    return bld.freeze()


def build_two_cliques_cut(m: int) -> Digraph:
    """[(K_m u K_m) + K_1]*: cliques ``0..m-1`` and ``m..2m-1``, cut vertex ``2m``."""
    _check_m(m)
    b = DigraphBuilder(2 * m + 1)
    b.add_clique(range(m))
    b.add_clique(range(m, 2 * m))
    for v in range(2 * m):
        b.add_edge(2 * m, v)
    return b.freeze()


def build_h2m(m: int, prime: bool = False) -> Digraph:
    """H(2m), or H'(2m) when ``prime``.

    Labels: A = ``0..m-2``, B = ``m-1..2m-3``, x = ``2m-2``, y = ``2m-1``.
    """
    _check_m(m)
    p = 2 * m
    x, y = p - 2, p - 1
    A = range(m - 1)
    B = range(m - 1, 2 * m - 2)
    b = DigraphBuilder(p)
    b.add_clique(A)
    b.add_clique(B)
    b.add_arc(x, y)
    for v in A:
        b.add_arc(x, v)
    for v in [*A, *B]:
        b.add_arc(v, x)
        b.add_arc(y, v)
    for v in B:
        b.add_arc(v, y)
    if prime:
        b.add_arc(y, x)
    return b.freeze()


def build_family(name: str, m: int, prime: bool = False, orientation: str = "in") -> Digraph:
    """Default-parameter instance by CLI-style family name."""
    if name == "bipartite_range":
        return build_bipartite_range(m)
    if name == "sub_kmm":
        return build_sub_kmm(m)
    if name == "h_mm":
        return build_h_mm(m)
    if name == "h_mm1":
        return build_h_mm1(m, orientation)
    if name == "two_cliques_cut":
        return build_two_cliques_cut(m)
    if name == "h2m":
        return build_h2m(m, prime)
    if name == "h2m_prime":
        return build_h2m(m, True)
    raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}")


FAMILY_NAMES = ("bipartite_range", "sub_kmm", "h_mm", "h_mm1", "two_cliques_cut", "h2m", "h2m_prime")

# ---------------------------------------------------------------------------
# validation


def _is_clique(d: Digraph, s: int) -> bool:
    return all(d.rows[v] & s == s & ~(1 << v) for v in bits(s))


def _is_independent(d: Digraph, s: int) -> bool:
    return all(not d.rows[v] & s for v in bits(s))


def _partition_ok(d: Digraph, *parts: int) -> bool:
    total = 0
    for s in parts:
        if total & s:
            return False
        total |= s
    return total == d.full_mask


def validate_label(d: Digraph, label: FamilyLabel) -> bool:
    """Re-check ``label``'s partition against its family definition."""
    m = label.m
    A, B = mask_of(label.A), mask_of(label.B)
    nA, nB = A.bit_count(), B.bit_count()
    rows, cols = d.rows, d.in_rows
    kind = label.kind

    if kind == SUB_KMM:
        return (d.p == 2 * m and nA == m and nB == m and _partition_ok(d, A, B)
                and _is_independent(d, A) and _is_independent(d, B))

    if kind == BIPARTITE_RANGE:
        return (d.p == 2 * m + 1 and nA == m and nB == m + 1 and _partition_ok(d, A, B)
                and _is_independent(d, B)
                and all(rows[v] & A == A and cols[v] & A == A for v in bits(B)))

    if kind == TWO_CLIQUES_CUT:
        if len(label.special) != 1:
            return False
        c = label.special[0]
        cm = 1 << c
        rest = d.full_mask & ~cm
        return (d.p == 2 * m + 1 and nA == m and nB == m and _partition_ok(d, A, B, cm)
                and rows[c] == rest and cols[c] == rest
                and _is_clique(d, A) and _is_clique(d, B)
                and all(not rows[v] & B for v in bits(A))
                and all(not rows[v] & A for v in bits(B)))

    if kind == HMM:
        return (d.p == 2 * m and nA == m and nB == m and _partition_ok(d, A, B)
                and _is_clique(d, A) and _is_clique(d, B)
                and all(not rows[v] & A for v in bits(B))
                and all(rows[v] & B for v in bits(A))
                and all(cols[v] & A for v in bits(B)))

    if kind == HMM1:
        if len(label.special) != 1 or label.orientation not in ("in", "out"):
            return False
        a = label.special[0]
        am = 1 << a
        if not (d.p == 2 * m and nA == m and nB == m - 1 and _partition_ok(d, A, B, am)):
            return False
        if not _is_independent(d, A):
            return False
        if not all(rows[v] & B == B and cols[v] & B == B for v in bits(A)):
            return False
        if label.orientation == "in":
            return cols[a] == B and rows[a] & A == A
        return rows[a] == B and cols[a] & A == A

    if kind in (H2M, H2M_PRIME):
        if len(label.special) != 2:
            return False
        x, y = label.special
        xm, ym = 1 << x, 1 << y
        prime = kind == H2M_PRIME
        return (d.p == 2 * m and nA == m - 1 and nB == m - 1 and _partition_ok(d, A, B, xm, ym)
                and _is_clique(d, A) and _is_clique(d, B)
                and all(not rows[v] & B for v in bits(A))
                and all(not rows[v] & A for v in bits(B))
                and rows[x] == ym | A
                and cols[x] == A | B | (ym if prime else 0)
                and rows[y] == A | B | (xm if prime else 0)
                and cols[y] == xm | B)

    raise ValueError(f"unknown family kind {kind!r}")


# ---------------------------------------------------------------------------
# recognition


def _bipartitions(d: Digraph) -> Optional[list[tuple[int, int]]]:
    """2-colourings of each component of the underlying graph, or None."""
    adj = [d.rows[v] | d.in_rows[v] for v in range(d.p)]
    colour = [-1] * d.p
    comps = []
    for s in range(d.p):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        sides = [1 << s, 0]
        queue = [s]
        for u in queue:
            for w in bits(adj[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    sides[colour[w]] |= 1 << w
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
        comps.append((sides[0], sides[1]))
    return comps


def _recognize_sub_kmm(d: Digraph) -> Optional[FamilyLabel]:
    if d.p % 2:
        return None
    m = d.p // 2
    comps = _bipartitions(d)
    if comps is None:
        return None
    # subset-sum over components: which side of each goes into A
    reach = {0: None}
    layers = []
    for s0, s1 in comps:
        nxt = {}
        for total in reach:
            for choice, s in ((0, s0), (1, s1)):
                t = total + s.bit_count()
                if t <= m and t not in nxt:
                    nxt[t] = (total, choice)
        layers.append(nxt)
        reach = nxt
    if m not in reach:
        return None
    A = 0
    total = m
    for (s0, s1), layer in zip(reversed(comps), reversed(layers)):
        prev, choice = layer[total]
        A |= s1 if choice else s0
        total = prev
    B = d.full_mask & ~A
    label = FamilyLabel(SUB_KMM, m, frozenset(bits(A)), frozenset(bits(B)))
    return label if validate_label(d, label) else None


def _recognize_bipartite_range(d: Digraph) -> Optional[FamilyLabel]:
    if d.p % 2 == 0 or d.p < 5:
        return None
    m = d.p // 2
    for v in range(d.p):
        A = d.rows[v]
        if A != d.in_rows[v] or A.bit_count() != m:
            continue
        B = d.full_mask & ~A
        label = FamilyLabel(BIPARTITE_RANGE, m, frozenset(bits(A)), frozenset(bits(B)))
        if validate_label(d, label):
            return label
    return None


def _recognize_two_cliques_cut(d: Digraph) -> Optional[FamilyLabel]:
    if d.p % 2 == 0 or d.p < 5:
        return None
    m = d.p // 2
    for c in range(d.p):
        rest = d.full_mask & ~(1 << c)
        if d.rows[c] != rest or d.in_rows[c] != rest:
            continue
        sub = Digraph(d.p, tuple(r & rest if v != c else 0 for v, r in enumerate(d.rows)))
        comps = [mask_of(s) for s in sub.strong_components() if c not in s]
        if len(comps) != 2:
            continue
        label = FamilyLabel(TWO_CLIQUES_CUT, m, frozenset(bits(comps[0])), frozenset(bits(comps[1])), (c,))
        if validate_label(d, label):
            return label
    return None


def _recognize_hmm(d: Digraph) -> Optional[FamilyLabel]:
    if d.p % 2:
        return None
    m = d.p // 2
    comps = d.strong_components()
    if len(comps) != 2:
        return None
    s0, s1 = (mask_of(s) for s in comps)
    A, B = (s0, s1) if any(d.rows[v] & s1 for v in bits(s0)) else (s1, s0)
    label = FamilyLabel(HMM, m, frozenset(bits(A)), frozenset(bits(B)))
    return label if validate_label(d, label) else None


def _recognize_hmm1(d: Digraph, orientation: str) -> Optional[FamilyLabel]:
    if d.p % 2:
        return None
    m = d.p // 2
    for a in range(d.p):
        B = d.in_rows[a] if orientation == "in" else d.rows[a]
        if B.bit_count() != m - 1:
            continue
        A = d.full_mask & ~B & ~(1 << a)
        label = FamilyLabel(HMM1, m, frozenset(bits(A)), frozenset(bits(B)), (a,), orientation)
        if validate_label(d, label):
            return label
    return None


def _recognize_h2m(d: Digraph, prime: bool) -> Optional[FamilyLabel]:
    if d.p % 2 or d.p < 4:
        return None
    m = d.p // 2
    kind = H2M_PRIME if prime else H2M
    for x in range(d.p):
        if d.rows[x].bit_count() != m:
            continue
        for y in bits(d.rows[x]):
            if d.in_rows[y].bit_count() != m:
                continue
            A = d.rows[x] & ~(1 << y)
            B = d.in_rows[y] & ~(1 << x)
            label = FamilyLabel(kind, m, frozenset(bits(A)), frozenset(bits(B)), (x, y))
            if validate_label(d, label):
                return label
    return None


_RECOGNIZERS = {
    SUB_KMM: [_recognize_sub_kmm],
    BIPARTITE_RANGE: [_recognize_bipartite_range],
    TWO_CLIQUES_CUT: [_recognize_two_cliques_cut],
    HMM: [_recognize_hmm],
    HMM1: [lambda d: _recognize_hmm1(d, "in"), lambda d: _recognize_hmm1(d, "out")],
    H2M_PRIME: [lambda d: _recognize_h2m(d, True)],
    H2M: [lambda d: _recognize_h2m(d, False)],
}

# Hmm precedes SubKmm: at m=2 the matching member of H(2,2) is also a
# subdigraph of K*_{2,2}, and the clique-pair reading is the tighter one.
PRECEDENCE = (HMM, SUB_KMM, BIPARTITE_RANGE, TWO_CLIQUES_CUT, HMM1, H2M_PRIME, H2M)


def recognize_all(d: Digraph) -> list[FamilyLabel]:
    """One validated label per matching family (and orientation), in precedence order."""
    out = []
    for kind in PRECEDENCE:
        for rec in _RECOGNIZERS[kind]:
            label = rec(d)
            if label is not None:
                out.append(label)
    return out


def recognize(d: Digraph) -> Optional[FamilyLabel]:
    """First family in precedence order whose definition ``d`` satisfies."""
    for kind in PRECEDENCE:
        for rec in _RECOGNIZERS[kind]:
            label = rec(d)
            if label is not None:
                return label
    return None

"""Executable lemma statements.

Each checker evaluates the premises on a concrete instance. When a premise
fails the report names it; otherwise the conclusion is tested directly and
the report is either ``Holds`` with a witness or ``Violated`` with the
offending structure. Path and cycle positions are 1-based, cycle positions
modulo the cycle length.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .digraph import Digraph
from .families import check_hypothesis
from .spectrum import Cycle, Path, cycle_spectrum, find_cycle_of_length, validate_cycle, validate_path

__all__ = [
    "LemmaReport",
    "Lemma6Params",
    "Status",
    "insertion_indices",
    "lemma1_check",
    "lemma2_check",
    "lemma2_insert",
    "lemma2_preconditions",
    "lemma3_check",
    "lemma4_check",
    "lemma5_check",
    "lemma6_check",
]


class Status(str, enum.Enum):
    PREMISE_FAILED = "PremiseFailed"
    HOLDS = "Holds"
    VIOLATED = "Violated"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    status: Status
    premise: Optional[str] = None
    witness: Any = None

    @property
    def violated(self) -> bool:
        return self.status is Status.VIOLATED

    def __str__(self) -> str:
        out = f"lemma={self.lemma} status={self.status}"
        if self.premise is not None:
            out += f" premise={self.premise}"
        if self.witness is not None:
            out += f" witness={_fmt_witness(self.witness)}"
        return out


def _fmt_witness(w: Any) -> str:
    if isinstance(w, dict):
        return ";".join(f"{k}:{_fmt_witness(v)}" for k, v in sorted(w.items()))
    if isinstance(w, (Cycle, Path)):
        return "-".join(map(str, w.verts))
    if isinstance(w, tuple):
        return "(" + ",".join(_fmt_witness(v) for v in w) + ")"
    return str(w)


def _failed(lemma: str, premise: str, witness: Any = None) -> LemmaReport:
    return LemmaReport(lemma, Status.PREMISE_FAILED, premise, witness)


def _as_path(d: Digraph, path: Sequence[int] | Path, x: int) -> Path:
    path = path if isinstance(path, Path) else Path(tuple(path))
    if not validate_path(d, path.verts):
        raise ValueError(f"{path.verts} is not a path of the digraph")
    _check_off(d, path.verts, x)
    return path


def _as_cycle(d: Digraph, cycle: Sequence[int] | Cycle, x: int) -> Cycle:
    cycle = cycle if isinstance(cycle, Cycle) else Cycle(tuple(cycle))
    if not validate_cycle(d, cycle.verts):
        raise ValueError(f"{cycle.verts} is not a cycle of the digraph")
    _check_off(d, cycle.verts, x)
    return cycle


def _check_off(d: Digraph, verts: Sequence[int], x: int) -> None:
    if not 0 <= x < d.p:
        raise ValueError(f"vertex {x} out of range 0..{d.p - 1}")
    if x in verts:
        raise ValueError(f"vertex {x} lies on the path/cycle")


def _arc(d: Digraph, u: int, v: int) -> bool:
    return bool(d.rows[u] >> v & 1)


# -- Lemma 1 -------------------------------------------------------------------


def lemma1_check(d: Digraph, cycle: Sequence[int] | Cycle, x: int) -> LemmaReport:
    """d(x,C) >= n+1 implies cycles of every length 2..n+1.

    The conclusion is searched for inside the subdigraph induced by
    V(C) u {x}, which is stronger than searching all of ``d``.
    """
    c = _as_cycle(d, cycle, x)
    n = len(c)
    if d.restricted_degree(x, c.verts) < n + 1:
        return _failed("1", "d(x,C)>=n+1")
    verts = sorted(c.verts + (x,))
    sub = d.induced(verts)
    found = {}
    for k in range(2, n + 2):
        w = find_cycle_of_length(sub, k)
        if w is None:
            return LemmaReport("1", Status.VIOLATED, witness={"missing": k})
        found[k] = Cycle(tuple(verts[v] for v in w.verts))
    return LemmaReport("1", Status.HOLDS, witness=found)


# -- Lemma 2 -------------------------------------------------------------------


def insertion_indices(d: Digraph, path: Sequence[int] | Path, x: int) -> list[int]:
    """All i in [1, n-1] with x_i -> x and x -> x_{i+1}."""
    P = _as_path(d, path, x)
    v = P.verts
    return [i + 1 for i in range(len(v) - 1) if _arc(d, v[i], x) and _arc(d, x, v[i + 1])]


def lemma2_insert(d: Digraph, path: Sequence[int] | Path, x: int) -> Optional[int]:
    """Smallest insertion position for ``x`` in ``path``, or None."""
    idx = insertion_indices(d, path, x)
    return idx[0] if idx else None


def lemma2_preconditions(d: Digraph, path: Sequence[int] | Path, x: int) -> tuple[str, ...]:
    """Which of the sufficient conditions (i), (ii), (iii) hold.

    (ii) is read as: d(x,P) >= n+1 and (x -> x_1 absent or x_n -> x absent).
    """
    P = _as_path(d, path, x)
    n = len(P)
    deg = d.restricted_degree(x, P.verts)
    no_x_first = not _arc(d, x, P[1])
    no_last_x = not _arc(d, P[n], x)
    held = []
    if deg >= n + 2:
        held.append("i")
    if deg >= n + 1 and (no_x_first or no_last_x):
        held.append("ii")
    if deg >= n and no_x_first and no_last_x:
        held.append("iii")
    return tuple(held)


def lemma2_check(d: Digraph, path: Sequence[int] | Path, x: int) -> LemmaReport:
    held = lemma2_preconditions(d, path, x)
    i = lemma2_insert(d, path, x)
    if not held:
        return _failed("2", "one of (i),(ii),(iii)", i)
    if i is None:
        return LemmaReport("2", Status.VIOLATED, witness={"preconditions": ",".join(held)})
    return LemmaReport("2", Status.HOLDS, witness=i)


# -- Lemma 3 -------------------------------------------------------------------


def lemma3_check(d: Digraph, cycle: Sequence[int] | Cycle, x: int, n: int) -> LemmaReport:
    """d(x,C_m) = m and no C_n imply x->x_i iff x_{i+n-2}->x is absent."""
    c = _as_cycle(d, cycle, x)
    m = len(c)
    if not 2 <= n <= m + 1:
        raise ValueError(f"n={n} outside [2, {m + 1}]")
    if d.restricted_degree(x, c.verts) != m:
        return _failed("3", "d(x,C)=m")
    if find_cycle_of_length(d, n) is not None:
        return _failed("3", f"no C_{n}")
    for i in range(1, m + 1):
        if _arc(d, x, c[i]) == _arc(d, c[i + n - 2], x):
            return LemmaReport("3", Status.VIOLATED, witness={"i": i})
    return LemmaReport("3", Status.HOLDS)


# -- Lemma 4 -------------------------------------------------------------------

LEMMA4_VARIANTS = ("a_i", "a_ii", "b")


def lemma4_check(d: Digraph, path: Sequence[int] | Path, x: int, variant: str) -> LemmaReport:
    if variant not in LEMMA4_VARIANTS:
        raise ValueError(f"unknown Lemma 4 variant {variant!r}; expected one of {LEMMA4_VARIANTS}")
    P = _as_path(d, path, x)
    n = len(P)
    deg = d.restricted_degree(x, P.verts)
    lemma = f"4{variant}"

    def into(i: int) -> bool:
        return _arc(d, P[i], x)

    def out(i: int) -> bool:
        return _arc(d, x, P[i])

    if variant == "b":
        if n < 3:
            return _failed(lemma, "n>=3")
        if deg != n + 1:
            return _failed(lemma, "d(x,P)=n+1")
        for i in range(1, n):
            if d.adjacent(x, P[i]) and d.adjacent(x, P[i + 1]):
                return _failed(lemma, "adjacent to at most one of two consecutive", i)
        odd = frozenset(P[i] for i in range(1, n + 1, 2))
        O = d.out_set(x) & frozenset(P.verts)
        I = d.in_set(x) & frozenset(P.verts)
        if n % 2 == 1 and O == odd and I == odd:
            return LemmaReport(lemma, Status.HOLDS)
        return LemmaReport(lemma, Status.VIOLATED, witness={"n": n, "O": tuple(sorted(O)), "I": tuple(sorted(I))})

    # common premises of part (a)
    if out(1):
        return _failed(lemma, "x->x_1 absent")
    if into(n):
        return _failed(lemma, "x_n->x absent")
    if any(into(i) and out(i + 1) for i in range(1, n)):
        return _failed(lemma, "x not insertable")

    if variant == "a_i":
        if n < 4:
            return _failed(lemma, "n>=4")
        for name, ok in (("x_1->x", into(1)), ("x_2->x", into(2)), ("x->x_n", out(n))):
            if not ok:
                return _failed(lemma, name)
        if deg < n - 1:
            return _failed(lemma, "d(x,P)>=n-1")
        for l in range(1, n - 2):
            if into(l) and out(l + 3):
                return LemmaReport(lemma, Status.HOLDS, witness=l)
        return LemmaReport(lemma, Status.VIOLATED, witness={"no_l_in": (1, n - 3)})

    # a_ii
    if n < 5:
        return _failed(lemma, "n>=5")
    if not out(n):
        return _failed(lemma, "x->x_n")
    if out(1) or out(2) or out(3):
        return _failed(lemma, "A(x->{x_1,x_2,x_3}) empty")
    if deg < n - 2:
        return _failed(lemma, "d(x,P)>=n-2")
    for i in range(1, n - 2):
        if into(i) and out(i + 3):
            return _failed(lemma, "|A(x_i->x)|+|A(x->x_{i+3})|<=1", i)
    for l in range(1, n - 3):
        if into(l) and out(l + 4):
            return LemmaReport(lemma, Status.HOLDS, witness=l)
    return LemmaReport(lemma, Status.VIOLATED, witness={"no_l_in": (1, n - 4)})


# -- Lemma 5 -------------------------------------------------------------------


def _spanning_minus_one(d: Digraph, cycle: Sequence[int] | Cycle, x: int) -> Cycle:
    c = _as_cycle(d, cycle, x)
    if len(c) != d.p - 1:
        raise ValueError(f"cycle has length {len(c)}, expected p-1 = {d.p - 1}")
    return c


def lemma5_check(d: Digraph, cycle: Sequence[int] | Cycle, x: int) -> LemmaReport:
    """Strong, degree hypothesis, x adjacent to all of C_{p-1}: cycles 3..p-2 exist."""
    c = _spanning_minus_one(d, cycle, x)
    hyp = check_hypothesis(d)
    if not hyp.size_ok:
        return _failed("5", "p>=10")
    if not d.is_strong():
        return _failed("5", "strong")
    if not hyp.min_degree_ok:
        return _failed("5", "min degree >= p-1")
    if not hyp.min_semidegree_ok:
        return _failed("5", "min semi-degree >= p/2-1")
    for v in c.verts:
        if not d.adjacent(x, v):
            return _failed("5", "x adjacent to all of C", v)
    spec = cycle_spectrum(d, range(3, d.p - 1))
    missing = [k for k in range(3, d.p - 1) if k not in spec]
    if missing:
        return LemmaReport("5", Status.VIOLATED, witness={"missing": tuple(missing)})
    return LemmaReport("5", Status.HOLDS, witness=dict(spec.witnesses))


# -- Lemma 6 -------------------------------------------------------------------


@dataclass(frozen=True)
class Lemma6Params:
    k: int
    a: int
    n: int
    cycle: Cycle
    x: int


def lemma6_check(d: Digraph, params: Lemma6Params) -> LemmaReport:
    """Conditional check of conclusions (i)-(iii) on a C_{p-1} and external x.

    With C(i,j) = {x_i..x_j} for i <= j: premises are the degree hypothesis,
    no C_n, A(x,x_{p-1}) empty, A(x,x_1) nonempty, x->x_a, x_{p-k-1}->x,
    A(C(p-k,p-1)->x) empty and A(x->C(1,a-1)) empty.
    """
    p = d.p
    k, a, n, x = params.k, params.a, params.n, params.x
    c = _spanning_minus_one(d, params.cycle, x)
    if k < 1 or a < 1:
        raise ValueError("k and a must be positive")
    if k + a > p - 2:
        raise ValueError(f"k+a = {k + a} exceeds p-2 = {p - 2}")
    if not 5 <= n <= p - 2:
        raise ValueError(f"n={n} outside [5, {p - 2}]")
    hyp = check_hypothesis(d)
    if not hyp.ok:
        return _failed("6", "degree hypothesis", ",".join(hyp.failures()))
    if d.adjacent(x, c[p - 1]):
        return _failed("6", "A(x,x_{p-1}) empty")
    if not d.adjacent(x, c[1]):
        return _failed("6", "A(x,x_1) nonempty")
    if not _arc(d, x, c[a]):
        return _failed("6", "x->x_a")
    if not _arc(d, c[p - k - 1], x):
        return _failed("6", "x_{p-k-1}->x")
    for i in range(p - k, p):
        if _arc(d, c[i], x):
            return _failed("6", "A(C(p-k,p-1)->x) empty", (c[i], x))
    for i in range(1, a):
        if _arc(d, x, c[i]):
            return _failed("6", "A(x->C(1,a-1)) empty", (x, c[i]))
    if find_cycle_of_length(d, n) is not None:
        return _failed("6", f"no C_{n}")

    if n > p - k - a + 2:
        return LemmaReport("6", Status.VIOLATED, witness={"conclusion": "i"})
    for i in range(p - k - 1, p - 1):
        for j in range(1, a + 1):
            if i - j + 1 >= n - 1 and _arc(d, c[i], c[j]):
                return LemmaReport("6", Status.VIOLATED, witness={"conclusion": "ii", "arc": (c[i], c[j])})
    for i in range(p - k - 2, p):
        for j in range(i + 1, p):
            if _arc(d, c[i], c[j]) != (j == i + 1):
                return LemmaReport("6", Status.VIOLATED, witness={"conclusion": "iii", "arc": (c[i], c[j])})
    return LemmaReport("6", Status.HOLDS)

"""Exhaustive and seeded instance sweeps for the lemma checkers.

Each sweep returns a :class:`SweepResult` tallying report statuses and
keeping every ``Violated`` instance so it can be written to disk.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path as FsPath
from typing import Any, Iterator, Optional

import numpy as np

from .digraph import Digraph, DigraphBuilder, complete, format_digraph
from .families import (build_bipartite_range, build_h2m, build_h_mm, build_h_mm1, build_sub_kmm,
                       build_two_cliques_cut, check_hypothesis)
from .harness import rng_for, sample_hypothesis_digraph
from .lemmas import (LemmaReport, Lemma6Params, Status, lemma1_check, lemma2_check, lemma3_check,
                     lemma4_check, lemma5_check, lemma6_check)
from .spectrum import Cycle, find_cycle_of_length, iter_cycles, spectrum_oracle

__all__ = [
    "SweepResult",
    "lemma1_exhaustive",
    "lemma1_seeded",
    "lemma2_exhaustive",
    "lemma3_exhaustive",
    "lemma3_seeded",
    "lemma4_exhaustive",
    "lemma4_seeded",
    "lemma5_seeded",
    "lemma6_harvest",
]


@dataclass
class Violation:
    digraph: Digraph
    args: dict[str, Any]
    report: LemmaReport


@dataclass
class SweepResult:
    lemma: str
    statuses: Counter = field(default_factory=Counter)
    violations: list[Violation] = field(default_factory=list)

    def record(self, d: Digraph, args: dict[str, Any], report: LemmaReport) -> None:
        self.statuses[report.status] += 1
        if report.violated:
            self.violations.append(Violation(d, args, report))

    @property
    def checked(self) -> int:
        return sum(self.statuses.values())

    @property
    def premise_true(self) -> int:
        return self.statuses[Status.HOLDS] + self.statuses[Status.VIOLATED]

    def persist(self, directory: FsPath | str, tag: str = "") -> list[FsPath]:
        """Write each violating instance as a digraph file plus JSON arguments.

        ``tag`` keeps files from different sweeps of the same lemma apart.
        """
        out = []
        directory = FsPath(directory)
        directory.mkdir(parents=True, exist_ok=True)
        for i, v in enumerate(self.violations):
            stem = directory / f"lemma{self.lemma}{tag}_violation_{i}"
            stem.with_suffix(".txt").write_text(format_digraph(v.digraph))
            stem.with_suffix(".json").write_text(json.dumps(
                {"args": v.args, "report": str(v.report)}, default=str, indent=1))
            out.append(stem.with_suffix(".txt"))
        return out

    def __str__(self) -> str:
        parts = ", ".join(f"{s.value}={self.statuses[s]}" for s in Status)
        return f"lemma {self.lemma}: checked={self.checked} {parts}"


# -- instance building -----------------------------------------------------------


def _attach(n: int, pattern: int, host: Optional[Digraph] = None) -> Digraph:
    """Host on vertices 0..n-1 plus x = n; bit i of ``pattern`` is x_{i+1} -> x,
    bit n+i is x -> x_{i+1}."""
    b = DigraphBuilder(n + 1)
    if host is not None:
        for u, v in host.arcs():
            b.add_arc(u, v)
    for i in range(n):
        if pattern >> i & 1:
            b.add_arc(i, n)
        if pattern >> (n + i) & 1:
            b.add_arc(n, i)
    return b.freeze()


def path_host(n: int, closing: bool = False) -> Digraph:
    b = DigraphBuilder(n)
    for i in range(n - 1):
        b.add_arc(i, i + 1)
    if closing and n > 1:
        b.add_arc(n - 1, 0)
    return b.freeze()


def _relabel(d: Digraph, perm: list[int]) -> Digraph:
    b = DigraphBuilder(d.p)
    for u, v in d.arcs():
        b.add_arc(perm[u], perm[v])
    return b.freeze()


def _embed(core: Digraph, x: int, extra: int, density: float,
           rng: np.random.Generator) -> tuple[Digraph, list[int]]:
    """Add ``extra`` vertices and random arcs, then shuffle labels.

    Arcs between ``x`` and the other core vertices are left exactly as in
    ``core``; every other pair may gain an arc with probability ``density``.
    """
    p = core.p + extra
    b = DigraphBuilder(p)
    for u, v in core.arcs():
        b.add_arc(u, v)
    for u in range(p):
        for v in range(p):
            if u == v or (u == x and v < core.p) or (v == x and u < core.p):
                continue
            if rng.random() < density:
                b.add_arc(u, v)
    perm = [int(t) for t in rng.permutation(p)]
    return _relabel(b.freeze(), perm), perm


# -- Lemma 1 -----------------------------------------------------------------------


def lemma1_exhaustive(max_n: int = 4) -> SweepResult:
    """Bare cycle C_n plus x, every x-pattern, n in 2..max_n."""
    res = SweepResult("1")
    for n in range(2, max_n + 1):
        host = path_host(n, closing=True)
        for pattern in range(1 << (2 * n)):
            d = _attach(n, pattern, host)
            res.record(d, {"cycle": list(range(n)), "x": n}, lemma1_check(d, list(range(n)), n))
    return res


def lemma1_seeded(count: int, seed: int) -> SweepResult:
    """``count`` premise-true instances: random host, random cycle, d(x,C) >= n+1."""
    res = SweepResult("1")
    i = 0
    while res.checked < count:
        rng = rng_for(seed, i)
        i += 1
        n = int(rng.integers(2, 8))
        weight = int(rng.integers(n + 1, 2 * n + 1))
        pattern = 0
        for slot in rng.choice(2 * n, size=weight, replace=False):
            pattern |= 1 << int(slot)
        core = _attach(n, pattern, path_host(n, closing=True))
        d, perm = _embed(core, n, int(rng.integers(0, 4)), float(rng.uniform(0, 0.5)), rng)
        cyc = [perm[v] for v in range(n)]
        x = perm[n]
        res.record(d, {"cycle": cyc, "x": x}, lemma1_check(d, cyc, x))
    return res


# -- Lemma 2 -----------------------------------------------------------------------


def lemma2_hosts(n: int) -> list[Digraph]:
    """Host arc configurations on the path vertices: bare, closed, complete."""
    return [path_host(n), path_host(n, closing=True), complete(n)] if n > 1 else [path_host(n)]


def lemma2_exhaustive(max_n: int = 6) -> SweepResult:
    res = SweepResult("2")
    for n in range(2, max_n + 1):
        for host in lemma2_hosts(n):
            for pattern in range(1 << (2 * n)):
                d = _attach(n, pattern, host)
                res.record(d, {"path": list(range(n)), "x": n}, lemma2_check(d, list(range(n)), n))
    return res


# -- Lemma 3 -----------------------------------------------------------------------


def _weight_patterns(n: int, weight: int) -> Iterator[int]:
    for slots in itertools.combinations(range(2 * n), weight):
        yield sum(1 << s for s in slots)


def lemma3_exhaustive(max_m: int = 5) -> SweepResult:
    """Bare cycle C_m plus x with d(x,C) = m, every such pattern and every n."""
    res = SweepResult("3")
    for m in range(2, max_m + 1):
        host = path_host(m, closing=True)
        for pattern in _weight_patterns(m, m):
            d = _attach(m, pattern, host)
            for n in range(2, m + 2):
                res.record(d, {"cycle": list(range(m)), "x": m, "n": n},
                           lemma3_check(d, list(range(m)), m, n))
    return res


def lemma3_seeded(count: int, seed: int, max_tries: int = 200_000) -> SweepResult:
    """Search random chorded cycles for instances where the premises hold.

    Only premise-true instances are recorded; ``count`` of them are returned.
    """
    res = SweepResult("3")
    for i in range(max_tries):
        if res.checked >= count:
            break
        rng = rng_for(seed, i)
        m = int(rng.integers(3, 7))
        slots = rng.choice(2 * m, size=m, replace=False)
        pattern = sum(1 << int(s) for s in slots)
        host = DigraphBuilder(m)
        for j in range(m):
            host.add_arc(j, (j + 1) % m)
        density = float(rng.uniform(0, 0.35))
        for u in range(m):
            for v in range(m):
                if u != v and rng.random() < density:
                    host.add_arc(u, v)
        d = _attach(m, pattern, host.freeze())
        n = int(rng.integers(2, m + 2))
        if find_cycle_of_length(d, n) is not None:
            continue
        perm = [int(t) for t in rng.permutation(m + 1)]
        d = _relabel(d, perm)
        cyc = [perm[j] for j in range(m)]
        report = lemma3_check(d, cyc, perm[m], n)
        if report.status is not Status.PREMISE_FAILED:
            res.record(d, {"cycle": cyc, "x": perm[m], "n": n}, report)
    return res


# -- Lemma 4 -----------------------------------------------------------------------


def lemma4_exhaustive(max_n: int = 6, variants=("a_i", "a_ii", "b")) -> dict[str, SweepResult]:
    out = {v: SweepResult(f"4{v}") for v in variants}
    for n in range(2, max_n + 1):
        host = path_host(n)
        for pattern in range(1 << (2 * n)):
            d = _attach(n, pattern, host)
            for v in variants:
                out[v].record(d, {"path": list(range(n)), "x": n, "variant": v},
                              lemma4_check(d, list(range(n)), n, v))
    return out


def _lemma4_pattern(n: int, variant: str, rng: np.random.Generator) -> int:
    """Draw an x-pattern respecting the variant's local premises."""
    if variant == "b":
        return sum((1 << i) | (1 << (n + i)) for i in range(0, n, 2))
    into = [False] * n
    out = [False] * n
    for i in range(n):
        blocked_out = (i >= 1 and into[i - 1]) or (variant == "a_ii" and i >= 3 and into[i - 3])
        out[i] = not blocked_out and rng.random() < 0.6
        into[i] = rng.random() < 0.6
    out[0] = False
    into[n - 1] = False
    if variant == "a_i":
        into[0] = into[1] = True
        out[1] = out[1] and not into[0]
        out[n - 1] = True
        into[n - 2] = into[n - 2] and not out[n - 1]
    else:
        out[1] = out[2] = False
        out[n - 1] = True
        into[n - 2] = False
        if n - 4 >= 0:
            into[n - 4] = False
    return sum(1 << i for i in range(n) if into[i]) | sum(1 << (n + i) for i in range(n) if out[i])


def lemma4_seeded(count: int, seed: int, variant: str, max_tries: int = 200_000) -> SweepResult:
    """``count`` premise-true instances for one variant, embedded in random hosts."""
    res = SweepResult(f"4{variant}")
    lo = {"a_i": 4, "a_ii": 5, "b": 3}[variant]
    for i in range(max_tries):
        if res.checked >= count:
            break
        rng = rng_for(seed, i)
        n = int(rng.integers(lo, 13))
        if variant == "b" and n % 2 == 0:
            n += 1
        pattern = _lemma4_pattern(n, variant, rng)
        core = _attach(n, pattern, path_host(n))
        if lemma4_check(core, list(range(n)), n, variant).status is Status.PREMISE_FAILED:
            continue
        d, perm = _embed(core, n, int(rng.integers(0, 4)), float(rng.uniform(0, 0.5)), rng)
        path = [perm[j] for j in range(n)]
        res.record(d, {"path": path, "x": perm[n], "variant": variant},
                   lemma4_check(d, path, perm[n], variant))
    return res


# -- Lemma 5 -----------------------------------------------------------------------


def lemma5_instances(d: Digraph) -> Iterator[tuple[Cycle, int]]:
    """(C_{p-1}, x) pairs with x adjacent to everything, one cycle per such x."""
    for x in range(d.p):
        if (d.rows[x] | d.in_rows[x]) != d.full_mask & ~(1 << x):
            continue
        rest = [v for v in range(d.p) if v != x]
        c = find_cycle_of_length(d.induced(rest), d.p - 1)
        if c is not None:
            yield Cycle(tuple(rest[v] for v in c.verts)), x


def lemma5_seeded(count: int, seed: int, p: int = 10, max_tries: int = 100_000) -> SweepResult:
    res = SweepResult("5")
    for i in range(max_tries):
        if res.checked >= count:
            break
        d = sample_hypothesis_digraph(p, seed, i)
        for c, x in lemma5_instances(d):
            report = lemma5_check(d, c, x)
            if report.status is not Status.PREMISE_FAILED:
                res.record(d, {"cycle": list(c.verts), "x": x}, report)
                break
    return res


# -- Lemma 6 -----------------------------------------------------------------------


def lemma6_hosts() -> list[tuple[str, Digraph]]:
    """Hypothesis-satisfying family members at p = 10, 11 used for harvesting."""
    hosts = [
        ("K*_{5,6}", build_bipartite_range(5, ())),
        ("K*_{5,6}+inner01", build_bipartite_range(5, [(0, 1), (1, 0)])),
        ("K*_{5,6}+inner0123", build_bipartite_range(5, [(0, 1), (2, 3)])),
        ("K*_{5,5}", build_sub_kmm(5)),
        ("H(5,5)", build_h_mm(5)),
        ("H(5,4,1)in", build_h_mm1(5, "in")),
        ("H(5,4,1)out", build_h_mm1(5, "out")),
        ("TwoCliquesCut(5)", build_two_cliques_cut(5)),
        ("H(10)", build_h2m(5)),
        ("H'(10)", build_h2m(5, True)),
    ]
    return [(name, d) for name, d in hosts if check_hypothesis(d).ok]


def lemma6_harvest(max_cycles: int = 40,
                   hosts: Optional[list[tuple[str, Digraph]]] = None) -> SweepResult:
    """Try every rotation of up to ``max_cycles`` C_{p-1} per host and every
    (k, a, n); record the tuples whose premises all hold."""
    res = SweepResult("6")
    for name, d in hosts if hosts is not None else lemma6_hosts():
        p = d.p
        absent = [n for n in range(5, p - 1) if n not in spectrum_oracle(d)]
        if not absent:
            continue
        for c in itertools.islice(iter_cycles(d, p - 1), max_cycles):
            x = next(v for v in range(p) if v not in c.vertex_set())
            for r in range(1, p):
                rc = c.rotate_to(r)
                for k in range(1, p - 2):
                    for a in range(1, p - 1 - k):
                        for n in absent:
                            params = Lemma6Params(k, a, n, rc, x)
                            report = lemma6_check(d, params)
                            if report.status is not Status.PREMISE_FAILED:
                                res.record(d, {"host": name, "cycle": list(rc.verts), "x": x,
                                               "k": k, "a": a, "n": n}, report)
    return res

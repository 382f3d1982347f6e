"""Seeded sampling of hypothesis digraphs and theorem-verification campaigns."""
from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .digraph import Digraph, DigraphBuilder, format_digraph
from .families import FamilyLabel, check_hypothesis, recognize
from .spectrum import cycle_spectrum

__all__ = [
    "CampaignReport",
    "SamplerConfig",
    "TheoremVerdict",
    "VERDICT_KINDS",
    "arc_count_bounds",
    "check_theorem",
    "perturb_family",
    "rng_for",
    "run_campaign",
    "sample_hypothesis_digraph",
]

log = logging.getLogger(__name__)

HYPOTHESIS_NOT_MET = "HypothesisNotMet"
PANCYCLIC = "Pancyclic"
EXCEPTIONAL = "Exceptional"
POTENTIAL_COUNTEREXAMPLE = "PotentialCounterexample"
VERDICT_KINDS = (HYPOTHESIS_NOT_MET, PANCYCLIC, EXCEPTIONAL, POTENTIAL_COUNTEREXAMPLE)

DEFAULT_MAX_P = 16


@dataclass(frozen=True)
class TheoremVerdict:
    kind: str
    reason: tuple[str, ...] = ()
    label: Optional[FamilyLabel] = None
    missing: tuple[int, ...] = ()

    def line(self, p: int, sample: int) -> str:
        return f"verdict={self.kind} p={p} sample={sample} missing={','.join(map(str, self.missing))}"

    def __str__(self) -> str:
        out = f"verdict={self.kind}"
        if self.reason:
            out += f" reason={','.join(self.reason)}"
        if self.label is not None:
            out += f" family={self.label.describe()}"
        if self.kind in (EXCEPTIONAL, POTENTIAL_COUNTEREXAMPLE):
            out += f" missing={','.join(map(str, self.missing))}"
        return out


def check_theorem(d: Digraph) -> TheoremVerdict:
    hyp = check_hypothesis(d)
    if not hyp.ok:
        return TheoremVerdict(HYPOTHESIS_NOT_MET, reason=tuple(hyp.failures()))
    missing = cycle_spectrum(d, range(3, d.p + 1)).missing(3)
    if not missing:
        return TheoremVerdict(PANCYCLIC)
    label = recognize(d)
    if label is None:
        return TheoremVerdict(POTENTIAL_COUNTEREXAMPLE, missing=missing)
    return TheoremVerdict(EXCEPTIONAL, label=label, missing=missing)


# -- sampling ------------------------------------------------------------------


def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, index); no shared state."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def arc_count_bounds(p: int) -> tuple[int, int]:
    """(feasibility frontier, complete digraph) arc counts under delta >= p-1."""
    return math.ceil(p * (p - 1) / 2), p * (p - 1)


@dataclass(frozen=True)
class SamplerConfig:
    """Arc-count range targeted by the sampler; None means the natural bound."""

    min_arcs: Optional[int] = None
    max_arcs: Optional[int] = None

    def bounds(self, p: int) -> tuple[int, int]:
        lo, hi = arc_count_bounds(p)
        lo = lo if self.min_arcs is None else max(lo, self.min_arcs)
        hi = hi if self.max_arcs is None else min(hi, self.max_arcs)
        if lo > hi:
            raise ValueError(f"empty arc-count range [{lo}, {hi}] for p={p}")
        return lo, hi


def sample_hypothesis_digraph(p: int, seed: int, index: int = 0, target_arcs: Optional[int] = None,
                              config: SamplerConfig = SamplerConfig()) -> Digraph:
    """Delete random arcs from K*_p while the degree hypothesis survives.

    Arcs are visited in a seeded random order and each is removed unless that
    would push some degree below p-1 or some semi-degree below p/2-1. The
    walk stops at ``target_arcs`` or when the order is exhausted; an arc that
    is blocked once stays blocked, so one pass reaches a maximal deletion.
    The result is biased towards no particular structure but is not uniform.
    """
    if p < 10:
        raise ValueError(f"sampler covers the theorem's range p >= 10, got p={p}")
    rng = rng_for(seed, index)
    lo, hi = config.bounds(p)
    if target_arcs is None:
        target_arcs = int(rng.integers(lo, hi + 1))
    arcs = [(u, v) for u in range(p) for v in range(p) if u != v]
    order = rng.permutation(len(arcs))
    od = [p - 1] * p
    idg = [p - 1] * p
    min_semi = math.ceil((p - 2) / 2)
    b = DigraphBuilder(p)
    b.rows = [((1 << p) - 1) & ~(1 << u) for u in range(p)]
    count = len(arcs)
    for j in order:
        if count <= target_arcs:
            break
        u, v = arcs[j]
        if (od[u] + idg[u] - 1 < p - 1 or od[v] + idg[v] - 1 < p - 1
                or od[u] - 1 < min_semi or idg[v] - 1 < min_semi):
            continue
        b.remove_arc(u, v)
        od[u] -= 1
        idg[v] -= 1
        count -= 1
    return b.freeze()


def perturb_family(d: Digraph, ops: Optional[Sequence[tuple[str, int, int]]] = None,
                   seed: Optional[int] = None, n_edits: int = 1) -> Digraph:
    """Apply ``("add"|"remove", u, v)`` edits, or ``n_edits`` seeded random arc toggles."""
    if ops is None:
        if seed is None:
            raise ValueError("give either explicit ops or a seed for random edits")
        rng = rng_for(seed)
        ops = []
        for _ in range(n_edits):
            u, v = (int(t) for t in rng.choice(d.p, size=2, replace=False))
            ops.append(("remove" if d.rows[u] >> v & 1 else "add", u, v))
    b = DigraphBuilder.from_digraph(d)
    for op, u, v in ops:
        if op == "add":
            b.add_arc(u, v)
        elif op == "remove":
            b.remove_arc(u, v)
        else:
            raise ValueError(f"unknown edit {op!r}; expected 'add' or 'remove'")
    return b.freeze()


# -- campaigns -----------------------------------------------------------------


@dataclass
class CampaignReport:
    p: int
    samples: int
    seed: int
    counts: dict[str, int]
    lines: list[str]
    runtime: float = 0.0
    counterexample_files: list[str] = field(default_factory=list)
    nonpancyclic_labels: dict[str, int] = field(default_factory=dict)

    @property
    def counterexamples(self) -> int:
        return self.counts[POTENTIAL_COUNTEREXAMPLE]

    def machine_lines(self) -> list[str]:
        return list(self.lines)

    def format(self, include_runtime: bool = True) -> str:
        out = [f"campaign p={self.p} samples={self.samples} seed={self.seed}"]
        out += [f"  {k}: {self.counts[k]}" for k in VERDICT_KINDS]
        for name, n in sorted(self.nonpancyclic_labels.items()):
            out.append(f"  family {name}: {n}")
        out.append(f"  counterexample files: {', '.join(self.counterexample_files) or 'none'}")
        if include_runtime:
            out.append(f"  runtime: {self.runtime:.2f}s")
        out += self.lines
        return "\n".join(out) + "\n"


def _targets(p: int, samples: int, config: SamplerConfig) -> list[int]:
    lo, hi = config.bounds(p)
    return [int(round(t)) for t in np.linspace(hi, lo, samples)]


def _evaluate(args: tuple[int, int, int, int, SamplerConfig]) -> tuple[int, Digraph, TheoremVerdict]:
    p, seed, index, target, config = args
    d = sample_hypothesis_digraph(p, seed, index, target, config)
    return index, d, check_theorem(d)


def run_campaign(p: int, samples: int, seed: int, max_p: int = DEFAULT_MAX_P,
                 out_dir: Optional[Path | str] = "counterexamples", workers: int = 1,
                 config: SamplerConfig = SamplerConfig()) -> CampaignReport:
    """Sample ``samples`` hypothesis digraphs and classify each one.

    Target arc counts sweep from the complete digraph down to the degree
    frontier in equal steps. Any sample that is neither pancyclic nor a
    recognised family member is written to ``out_dir``.
    """
    if p < 10:
        raise ValueError(f"campaigns cover p >= 10, got p={p}")
    if p > max_p:
        raise ValueError(f"p={p} exceeds the resource guard max_p={max_p}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    start = time.perf_counter()
    jobs = [(p, seed, i, t, config) for i, t in enumerate(_targets(p, samples, config))]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_evaluate, jobs, chunksize=max(1, samples // (8 * workers))))
    else:
        results = [_evaluate(j) for j in jobs]
    results.sort(key=lambda r: r[0])

    counts = {k: 0 for k in VERDICT_KINDS}
    labels: dict[str, int] = {}
    lines = []
    files = []
    for i, d, verdict in results:
        counts[verdict.kind] += 1
        lines.append(verdict.line(p, i))
        if verdict.label is not None:
            labels[str(verdict.label)] = labels.get(str(verdict.label), 0) + 1
        if verdict.kind == POTENTIAL_COUNTEREXAMPLE:
            if out_dir is None:
                raise RuntimeError(f"sample {i} is a potential counterexample and no output directory was given")
            path = Path(out_dir) / f"counterexample_p{p}_seed{seed}_sample{i}.txt"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(format_digraph(d))
            files.append(str(path))
            log.warning("potential counterexample written to %s (missing %s)", path, verdict.missing)
    return CampaignReport(p, samples, seed, counts, lines, time.perf_counter() - start, files, labels)
